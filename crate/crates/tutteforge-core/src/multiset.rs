//! Finitely supported multi-sets, multi-images, and the correspondence
//! between multi-subsets of N x N and bivariate polynomials with natural
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A multi-subset: each element of the support carries a positive count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiSet<T: Ord> {
    counts: BTreeMap<T, u64>,
}

impl<T: Ord> MultiSet<T> {
    pub fn new() -> Self {
        MultiSet {
            counts: BTreeMap::new(),
        }
    }

    /// Add `count` copies of `item`, with checked arithmetic.
    pub fn add(&mut self, item: T, count: u64) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let slot = self.counts.entry(item).or_insert(0);
        *slot = slot.checked_add(count).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn count(&self, item: &T) -> u64 {
        self.counts.get(item).copied().unwrap_or(0)
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of copies.
    pub fn total(&self) -> Result<u64> {
        self.counts
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u64)> {
        self.counts.iter().map(|(t, &c)| (t, c))
    }
}

impl<T: Ord> FromIterator<(T, u64)> for MultiSet<T> {
    fn from_iter<I: IntoIterator<Item = (T, u64)>>(iter: I) -> Self {
        let mut m = MultiSet::new();
        for (t, c) in iter {
            m.add(t, c).expect("count overflow while collecting");
        }
        m
    }
}

/// The multi-image of plain items under `f`: counts of equal images.
pub fn multi_image<S, R: Ord>(items: &[S], mut f: impl FnMut(&S) -> R) -> MultiSet<R> {
    let mut out = MultiSet::new();
    for s in items {
        out.add(f(s), 1).expect("image count overflow");
    }
    out
}

/// The multi-image of a multi-set under a table-backed map; the table must
/// cover the whole support.
pub fn multi_image_mapped<S: Ord, R: Ord + Clone>(
    m: &MultiSet<S>,
    table: &BTreeMap<S, R>,
) -> Result<MultiSet<R>> {
    let mut out = MultiSet::new();
    for (s, c) in m.iter() {
        let r = table.get(s).ok_or(Error::PartialMap)?;
        out.add(r.clone(), c)?;
    }
    Ok(out)
}

/// Multi-subset of N x N; doubles as a bivariate polynomial with natural
/// coefficients, `(i, j) -> coefficient of x^i y^j`.
pub type BivarMultiSet = MultiSet<(u32, u32)>;

/// One rendered term of a [`BivarMultiSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub x: u32,
    pub y: u32,
    pub coeff: u64,
}

impl BivarMultiSet {
    pub fn from_terms(terms: &[(u32, u32, u64)]) -> Result<Self> {
        let mut m = BivarMultiSet::new();
        for &(x, y, c) in terms {
            m.add((x, y), c)?;
        }
        Ok(m)
    }

    /// Terms sorted by `(x desc, y desc)`.
    pub fn to_terms(&self) -> Vec<Term> {
        let mut terms: Vec<Term> = self
            .iter()
            .map(|(&(x, y), coeff)| Term { x, y, coeff })
            .collect();
        terms.sort_by_key(|t| core::cmp::Reverse((t.x, t.y)));
        terms
    }

    /// Swap the two variables.
    pub fn transpose(&self) -> BivarMultiSet {
        self.iter().map(|(&(x, y), c)| ((y, x), c)).collect()
    }

    /// Render as e.g. `x^2 + x + y`: coefficient 1 omitted, exponent 1
    /// omitted, terms joined by ` + `, the zero polynomial printed as `0`.
    pub fn render(&self) -> String {
        if self.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, t) in self.to_terms().iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if t.coeff != 1 || (t.x == 0 && t.y == 0) {
                parts.push(alloc::format!("{}", t.coeff));
            }
            if t.x > 0 {
                parts.push(if t.x == 1 {
                    String::from("x")
                } else {
                    alloc::format!("x^{}", t.x)
                });
            }
            if t.y > 0 {
                parts.push(if t.y == 1 {
                    String::from("y")
                } else {
                    alloc::format!("y^{}", t.y)
                });
            }
            out.push_str(&parts.join(" "));
        }
        out
    }

    /// Inverse of [`render`](Self::render).
    pub fn parse(text: &str) -> Result<BivarMultiSet> {
        let text = text.trim();
        let mut m = BivarMultiSet::new();
        if text == "0" {
            return Ok(m);
        }
        for term in text.split(" + ") {
            let mut coeff: u64 = 1;
            let mut x: u32 = 0;
            let mut y: u32 = 0;
            let mut saw_var_or_coeff = false;
            for token in term.split_whitespace() {
                if let Some(rest) = token.strip_prefix("x") {
                    x = parse_exponent(rest)?;
                } else if let Some(rest) = token.strip_prefix("y") {
                    y = parse_exponent(rest)?;
                } else {
                    coeff = token
                        .parse::<u64>()
                        .map_err(|_| Error::BadParameters(alloc::format!("bad term `{term}`")))?;
                }
                saw_var_or_coeff = true;
            }
            if !saw_var_or_coeff {
                return Err(Error::BadParameters(alloc::format!(
                    "empty term in `{text}`"
                )));
            }
            m.add((x, y), coeff)?;
        }
        Ok(m)
    }

    /// Evaluate at integers with checked arithmetic.
    pub fn evaluate(&self, x: i64, y: i64) -> Result<i128> {
        let mut acc: i128 = 0;
        for (&(i, j), c) in self.iter() {
            let xi = checked_pow(x as i128, i)?;
            let yj = checked_pow(y as i128, j)?;
            let term = (c as i128)
                .checked_mul(xi)
                .and_then(|v| v.checked_mul(yj))
                .ok_or(Error::Overflow)?;
            acc = acc.checked_add(term).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

fn parse_exponent(rest: &str) -> Result<u32> {
    if rest.is_empty() {
        Ok(1)
    } else if let Some(e) = rest.strip_prefix('^') {
        e.parse::<u32>()
            .map_err(|_| Error::BadParameters(alloc::format!("bad exponent `{rest}`")))
    } else {
        Err(Error::BadParameters(alloc::format!(
            "bad exponent `{rest}`"
        )))
    }
}

fn checked_pow(base: i128, exp: u32) -> Result<i128> {
    let mut acc: i128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multi_image_counts_collisions() {
        // f(a) = f(b), f(c) separate
        let items = ["a", "b", "c"];
        let img = multi_image(&items, |s| if *s == "c" { "y" } else { "x" });
        assert_eq!(img.count(&"x"), 2);
        assert_eq!(img.count(&"y"), 1);

        let inj = multi_image(&items, |s| *s);
        assert!(inj.iter().all(|(_, c)| c == 1));
    }

    #[test]
    fn mapped_image_requires_total_table() {
        let mut m = MultiSet::new();
        m.add("a", 2).unwrap();
        let table: BTreeMap<&str, u8> = BTreeMap::new();
        assert_eq!(multi_image_mapped(&m, &table), Err(Error::PartialMap));
    }

    #[test]
    fn render_conventions() {
        let m = BivarMultiSet::from_terms(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(m.render(), "x^2 + x + y");
        assert_eq!(BivarMultiSet::new().render(), "0");
        let c = BivarMultiSet::from_terms(&[(0, 0, 5), (2, 3, 4), (1, 1, 1)]).unwrap();
        assert_eq!(c.render(), "4 x^2 y^3 + x y + 5");
    }

    #[test]
    fn parse_render_round_trip() {
        for text in ["x^2 + x + y", "0", "4 x^2 y^3 + x y + 5", "7"] {
            let m = BivarMultiSet::parse(text).unwrap();
            assert_eq!(m.render(), text);
        }
        assert!(BivarMultiSet::parse("x^").is_err());
    }

    #[test]
    fn evaluation() {
        let m = BivarMultiSet::from_terms(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(m.evaluate(1, 1).unwrap(), 3);
        assert_eq!(m.evaluate(2, -1).unwrap(), 4 + 2 - 1);
        assert_eq!(BivarMultiSet::new().evaluate(5, 5).unwrap(), 0);
    }

    #[test]
    fn checked_count_arithmetic() {
        let mut m = MultiSet::new();
        m.add((), u64::MAX).unwrap();
        assert_eq!(m.add((), 1), Err(Error::Overflow));
    }
}
