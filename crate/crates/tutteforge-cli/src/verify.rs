//! The verification suites behind `tutteforge verify`.

use anyhow::{bail, Result};
use serde_json::json;

use tutteforge_core::{
    check_forced_balance, edges_at, oracle, tutte, verify_edge_involution, whitney_multiset,
    Budget, ElemSubset, LinearOrder, Linking, OrderEdge, PreMatroid, XorShift64Star,
};

use crate::json::Input;
use crate::report::CheckList;

/// Which orders a sweep ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderSelection {
    All,
    Random(usize),
}

impl OrderSelection {
    pub fn parse(text: &str) -> Result<Self> {
        if text == "all" {
            return Ok(OrderSelection::All);
        }
        if let Some(n) = text.strip_prefix("random:") {
            let n: usize = n.parse()?;
            if n == 0 {
                bail!("random order count must be positive");
            }
            return Ok(OrderSelection::Random(n));
        }
        bail!("--orders must be `all` or `random:N`");
    }
}

/// The sampled orders: the natural order first, then either every order or
/// the seeded random draw.
pub fn sample_orders(n: usize, selection: OrderSelection, seed: u64) -> Result<Vec<LinearOrder>> {
    match selection {
        OrderSelection::All => {
            if n > 8 {
                bail!("--orders all enumerates n! orders; refusing n = {n} > 8");
            }
            let mut seq: Vec<u8> = (0..n as u8).collect();
            let mut out = Vec::new();
            permute(&mut seq, 0, &mut out);
            Ok(out)
        }
        OrderSelection::Random(count) => {
            let mut rng = XorShift64Star::new(seed);
            let mut out = vec![LinearOrder::natural(n)];
            for _ in 0..count {
                out.push(LinearOrder::from_sequence(&rng.permutation(n)).expect("permutation"));
            }
            Ok(out)
        }
    }
}

fn permute(seq: &mut Vec<u8>, k: usize, out: &mut Vec<LinearOrder>) {
    if k == seq.len() {
        out.push(LinearOrder::from_sequence(seq).expect("permutation"));
        return;
    }
    for i in k..seq.len() {
        seq.swap(k, i);
        permute(seq, k + 1, out);
        seq.swap(k, i);
    }
}

fn order_labels(m: &PreMatroid, order: &LinearOrder) -> Vec<String> {
    order
        .sequence()
        .iter()
        .map(|&e| m.ground().label(e).to_string())
        .collect()
}

fn set_labels(m: &PreMatroid, s: ElemSubset) -> Vec<String> {
    m.ground().labels_of(s)
}

pub struct SuiteContext<'a> {
    pub input: &'a Input,
    pub orders: Vec<LinearOrder>,
    pub budget: Budget,
    /// Restrict the per-edge sweep to this swapped pair.
    pub edge_filter: Option<(u8, u8)>,
    pub collect_all: bool,
}

pub fn run_exchange_suite(ctx: &SuiteContext, checks: &mut CheckList) {
    let m = ctx.input.matroid();
    let exchange = m.check_exchange();
    if exchange.holds {
        checks.pass("exchange");
    } else {
        let w = exchange.witness.expect("failing report carries a witness");
        checks.fail(
            "exchange",
            "no exchange partner".to_string(),
            json!({
                "property": "exchange",
                "basis_a": set_labels(m, w.basis_a),
                "basis_b": set_labels(m, w.basis_b),
                "element": m.ground().label(w.moved),
            }),
        );
    }

    let symmetric = m.check_symmetric_exchange();
    if symmetric.holds {
        checks.pass("symmetric-exchange");
    } else {
        let w = symmetric.witness.expect("failing report carries a witness");
        checks.fail(
            "symmetric-exchange",
            "no symmetric exchange partner".to_string(),
            json!({
                "property": "symmetric-exchange",
                "basis_a": set_labels(m, w.basis_a),
                "basis_b": set_labels(m, w.basis_b),
                "element": m.ground().label(w.moved),
            }),
        );
    }

    if !exchange.holds {
        checks.skip("basis-antichain", "input is not a matroid");
        checks.skip("dual-is-matroid", "input is not a matroid");
    } else {
        if m.is_antichain() {
            checks.pass("basis-antichain");
        } else {
            checks.fail(
                "basis-antichain",
                "a basis contains another".to_string(),
                json!({"property": "basis-antichain"}),
            );
        }
        if m.dual().check_exchange().holds {
            checks.pass("dual-is-matroid");
        } else {
            checks.fail(
                "dual-is-matroid",
                "dual fails exchange".to_string(),
                json!({"property": "dual-is-matroid"}),
            );
        }
    }

    if m.dual().dual() == *m {
        checks.pass("dual-involution");
    } else {
        checks.fail(
            "dual-involution",
            "double dual differs".to_string(),
            json!({"property": "dual-involution"}),
        );
    }
}

pub fn run_independence_suite(ctx: &SuiteContext, checks: &mut CheckList) {
    let m = ctx.input.matroid();
    let reference = tutte(m, &ctx.orders[0]);

    let mut broke = None;
    for order in &ctx.orders[1..] {
        let t = tutte(m, order);
        if t != reference {
            broke = Some((order.clone(), t));
            break;
        }
    }
    match broke {
        None => checks.pass("tutte-order-independence"),
        Some((order, t)) => checks.fail(
            "tutte-order-independence",
            "polynomial depends on the order".to_string(),
            json!({
                "property": "tutte-order-independence",
                "order_a": order_labels(m, &ctx.orders[0]),
                "order_b": order_labels(m, &order),
                "polynomial_a": reference.render(),
                "polynomial_b": t.render(),
            }),
        ),
    }

    if m.is_matroid() {
        match oracle::tutte_corank_nullity(m, ctx.budget) {
            Ok(expansion) if expansion == reference => {
                checks.pass("tutte-matches-subset-expansion")
            }
            Ok(expansion) => checks.fail(
                "tutte-matches-subset-expansion",
                "subset expansion disagrees".to_string(),
                json!({
                    "property": "tutte-matches-subset-expansion",
                    "activity": reference.render(),
                    "subset_expansion": expansion.render(),
                }),
            ),
            Err(err) => checks.skip("tutte-matches-subset-expansion", &err.to_string()),
        }
    } else {
        checks.skip("tutte-matches-subset-expansion", "input is not a matroid");
    }

    match ctx.input.graph() {
        Some(graph) => {
            let recursive = oracle::tutte_deletion_contraction(graph);
            if recursive == reference {
                checks.pass("tutte-matches-deletion-contraction");
            } else {
                checks.fail(
                    "tutte-matches-deletion-contraction",
                    "recursion disagrees".to_string(),
                    json!({
                        "property": "tutte-matches-deletion-contraction",
                        "activity": reference.render(),
                        "deletion_contraction": recursive.render(),
                    }),
                );
            }
        }
        None => checks.skip("tutte-matches-deletion-contraction", "input is not a graph"),
    }

    if reference.evaluate(1, 1).ok() == Some(m.basis_count() as i128) {
        checks.pass("count-at-one-one");
    } else {
        checks.fail(
            "count-at-one-one",
            "value at (1,1) is not the basis count".to_string(),
            json!({
                "property": "count-at-one-one",
                "polynomial": reference.render(),
                "bases": m.basis_count(),
            }),
        );
    }

    let mut whitney_broke = None;
    'outer: for (name, l) in named_linkings(m) {
        let reference = whitney_multiset(&l, &ctx.orders[0]).expect("verified linking");
        for order in &ctx.orders[1..] {
            let w = whitney_multiset(&l, order).expect("verified linking");
            if w != reference {
                whitney_broke = Some((name, order.clone()));
                break 'outer;
            }
        }
    }
    match whitney_broke {
        None => checks.pass("whitney-order-independence"),
        Some((name, order)) => checks.fail(
            "whitney-order-independence",
            format!("{name} linking depends on the order"),
            json!({
                "property": "whitney-order-independence",
                "linking": name,
                "order": order_labels(m, &order),
            }),
        ),
    }
}

fn named_linkings(m: &PreMatroid) -> [(&'static str, Linking); 2] {
    [
        ("identity", Linking::identity(m)),
        ("complement", Linking::complement(m)),
    ]
}

pub fn run_linkings_suite(ctx: &SuiteContext, checks: &mut CheckList) {
    let m = ctx.input.matroid();
    for (name, l) in named_linkings(m) {
        let report = l.check();
        if report.is_linking {
            checks.pass(&format!("{name}-linking-valid"));
        } else {
            let v = report
                .violation
                .expect("failing report carries a violation");
            checks.fail(
                &format!("{name}-linking-valid"),
                "linking condition violated".to_string(),
                json!({
                    "property": format!("{name}-linking-valid"),
                    "basis": set_labels(m, v.basis),
                    "swap": [m.ground().label(v.swap.a), m.ground().label(v.swap.b)],
                }),
            );
            continue;
        }

        match l.classify() {
            Ok(class) => checks.pass(&format!("{name}-classifies-as-{class:?}").to_lowercase()),
            Err(err) => checks.fail(
                &format!("{name}-classifies"),
                err.to_string(),
                json!({"property": format!("{name}-classifies")}),
            ),
        }

        if l.inverse().check().is_linking {
            checks.pass(&format!("{name}-inverse-is-linking"));
        } else {
            checks.fail(
                &format!("{name}-inverse-is-linking"),
                "inverse fails the linking conditions".to_string(),
                json!({"property": format!("{name}-inverse-is-linking")}),
            );
        }
    }

    // extensions transfer through the linking
    let mut transfer_failure = None;
    'sweep: for (name, l) in named_linkings(m) {
        let target_almost = l.target().almost_bases();
        for s in m.almost_bases() {
            let u = m.extension_set(s).expect("almost-basis");
            for x in u.iter() {
                for y in u.iter() {
                    if x == y {
                        continue;
                    }
                    for &a in &target_almost {
                        if !l.check_extension_transfer(s, x, y, a).unwrap_or(false) {
                            transfer_failure = Some((name, s, x, y, a));
                            break 'sweep;
                        }
                    }
                }
            }
        }
    }
    match transfer_failure {
        None => checks.pass("extension-transfer"),
        Some((name, s, x, y, a)) => checks.fail(
            "extension-transfer",
            format!("conclusion fails under the {name} linking"),
            json!({
                "property": "extension-transfer",
                "linking": name,
                "almost_basis": set_labels(m, s),
                "x": m.ground().label(x),
                "y": m.ground().label(y),
                "target_almost_basis": set_labels(m, a),
            }),
        ),
    }
}

pub fn run_involution_suite(ctx: &SuiteContext, checks: &mut CheckList) {
    let m = ctx.input.matroid();
    let is_matroid = m.is_matroid();
    let mut involution_failures = 0usize;
    let mut first_involution: Option<serde_json::Value> = None;
    let mut balance_failures = 0usize;
    let mut first_balance: Option<serde_json::Value> = None;
    let mut edges_checked = 0usize;
    let linkings = named_linkings(m);

    for order in &ctx.orders {
        for edge in selected_edges(order, ctx.edge_filter) {
            edges_checked += 1;
            for (name, l) in &linkings {
                let report =
                    verify_edge_involution(l, &edge, ctx.collect_all).expect("verified linking");
                if !report.passed {
                    involution_failures += report.failures.len();
                    if first_involution.is_none() {
                        first_involution = Some(json!({
                            "property": "involution-invariants",
                            "linking": name,
                            "order": order_labels(m, edge.base()),
                            "swap": [
                                m.ground().label(edge.lower()),
                                m.ground().label(edge.upper()),
                            ],
                            "failure": format!("{:?}", report.failures[0]),
                        }));
                    }
                }
                if is_matroid {
                    let balance = check_forced_balance(l, &edge).expect("matroid sides");
                    if !balance.passed {
                        balance_failures += balance.failures.len();
                        if first_balance.is_none() {
                            first_balance = Some(json!({
                                "property": "forced-balance",
                                "linking": name,
                                "order": order_labels(m, edge.base()),
                                "swap": [
                                    m.ground().label(edge.lower()),
                                    m.ground().label(edge.upper()),
                                ],
                                "failure": format!("{:?}", balance.failures[0]),
                            }));
                        }
                    }
                }
            }
        }
    }

    if involution_failures == 0 {
        checks.pass("involution-invariants");
    } else {
        checks.fail(
            "involution-invariants",
            format!("{involution_failures} failures over {edges_checked} edges"),
            first_involution.expect("failure recorded"),
        );
    }

    if !is_matroid {
        checks.skip("forced-balance", "input is not a matroid");
    } else if balance_failures == 0 {
        checks.pass("forced-balance");
    } else {
        checks.fail(
            "forced-balance",
            format!("{balance_failures} failures over {edges_checked} edges"),
            first_balance.expect("failure recorded"),
        );
    }
}

fn selected_edges(order: &LinearOrder, filter: Option<(u8, u8)>) -> Vec<OrderEdge> {
    match filter {
        None => edges_at(order),
        Some((a, b)) => OrderEdge::from_swap(order, a, b).into_iter().collect(),
    }
}
