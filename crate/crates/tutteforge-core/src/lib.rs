//! Matroids, order-dependent activities, Tutte polynomials, linkings and
//! the verification machinery around them, on ground sets of up to 64
//! elements represented as bit vectors.
//!
//! The crate is `no_std` (with `alloc`); everything is a pure function of
//! immutable values and safe to call concurrently.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod activity;
pub mod balance;
pub mod budget;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod linking;
pub mod multiset;
pub mod oracle;
pub mod order;
pub mod prematroid;
pub mod rng;
pub mod subset;

pub use activity::{
    activities, min_extend, min_reduce, tutte, tutte_linking, whitney_multiset, ActivityRecord,
    ActivityTable,
};
pub use balance::{
    check_forced_balance, classify_almost, edge_involution, is_balanced_almost, is_balanced_basis,
    is_edge_balanced_almost, verify_edge_involution, AlmostClass, EdgeAnalysis,
    ForcedBalanceReport, InvolutionFailure, InvolutionReport,
};
pub use budget::Budget;
pub use constructors::{gf2_linear_matroid, graphic_matroid, uniform_matroid, Graph, GraphEdge};
pub use error::{Error, Result};
pub use linking::{
    basis_path, LinkCondition, Linking, LinkingClass, LinkingReport, LinkingViolation,
};
pub use multiset::{multi_image, multi_image_mapped, BivarMultiSet, MultiSet, Term};
pub use order::{edges_at, path_between, LinearOrder, OrderEdge, Permutation, Side, Transposition};
pub use prematroid::{validate_prematroid, ExchangeReport, ExchangeWitness, PreMatroid};
pub use rng::XorShift64Star;
pub use subset::{ElemSubset, GroundSet};
