//! Colength by linear algebra on truncated multiples, independent of the
//! standard basis engine.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use super::LocalIdeal;
use crate::poly::{Coeff, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleValue {
    Value(u64),
    ExceedsBound,
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleValue::Value(v) => write!(f, "{v}"),
            OracleValue::ExceedsBound => f.write_str("exceeds bound"),
        }
    }
}

/// All monomials in `n` variables of degree `< bound`, sorted largest first
/// in the local ordering.
fn monomials_below(n: usize, bound: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if bound > 0 {
        rec(n, 0, bound - 1, &mut vec![0; n], &mut out);
    }
    out.sort();
    out.reverse();
    out
}

type Row = Vec<(usize, Coeff)>;

fn sub_scaled(a: &Row, b: &Row, c: &Coeff) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Degrees of the pivots of an echelon basis of the span of all
/// `m·g` truncated below `bound`.
fn pivot_degrees(ideal: &LocalIdeal, bound: u32) -> (Vec<Monomial>, Vec<u32>) {
    let n = ideal.ring().dim();
    let monos = monomials_below(n, bound);
    let index: HashMap<Monomial, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut pivots: HashMap<usize, Row> = HashMap::new();
    for g in ideal.gens() {
        let ord = g.ord().expect("nonzero generator");
        if ord >= bound {
            continue;
        }
        for m in monos.iter().filter(|m| m.degree() + ord < bound) {
            let mut row: Row = g
                .terms()
                .iter()
                .filter_map(|(t, c)| {
                    let p = t.mul(m);
                    (p.degree() < bound).then(|| (index[&p], c.clone()))
                })
                .collect();
            row.sort_by_key(|e| e.0);
            while let Some((col, lead)) = row.first().cloned() {
                match pivots.get(&col) {
                    Some(p) => row = sub_scaled(&row, p, &lead),
                    None => {
                        let inv = Coeff::one() / lead;
                        for e in row.iter_mut() {
                            e.1 *= &inv;
                        }
                        pivots.insert(col, row);
                        break;
                    }
                }
            }
        }
    }
    let degs = pivots.keys().map(|&c| monos[c].degree()).collect();
    (monos, degs)
}

/// `dim O/I` when it can be certified with monomials of degree `< bound`.
///
/// Computes `d(k) = dim O/(I + m^k)` for `k = bound - 1, bound`; equal values
/// force `m^(bound-1) ⊂ I` and give the colength, otherwise the answer is
/// [`OracleValue::ExceedsBound`].
pub fn colength_oracle(ideal: &LocalIdeal, bound: u32) -> OracleValue {
    assert!(bound >= 1, "oracle bound must be positive");
    if ideal.is_zero() {
        return OracleValue::ExceedsBound;
    }
    let (monos, degs) = pivot_degrees(ideal, bound);
    let below = |k: u32| monos.iter().filter(|m| m.degree() < k).count() as u64;
    let rank = |k: u32| degs.iter().filter(|&&d| d < k).count() as u64;
    let hi = below(bound) - rank(bound);
    let lo = below(bound - 1) - rank(bound - 1);
    if hi == lo {
        OracleValue::Value(hi)
    } else {
        OracleValue::ExceedsBound
    }
}

/// Tries bounds 4, 8, 16, … up to `max_bound`.
pub fn colength_oracle_auto(ideal: &LocalIdeal, max_bound: u32) -> OracleValue {
    let mut b = 4;
    loop {
        let b_eff = b.min(max_bound);
        if let v @ OracleValue::Value(_) = colength_oracle(ideal, b_eff) {
            return v;
        }
        if b_eff >= max_bound {
            return OracleValue::ExceedsBound;
        }
        b *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ideal(r: &Ring, gens: &[&str]) -> LocalIdeal {
        LocalIdeal::new(r, gens.iter().map(|g| r.parse(g).unwrap())).unwrap()
    }

    #[test]
    fn small_cases() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(colength_oracle(&ideal(&r, &["x", "y"]), 4), OracleValue::Value(1));
        assert_eq!(colength_oracle(&ideal(&r, &["y^2", "x^5"]), 3), OracleValue::ExceedsBound);
        assert_eq!(colength_oracle(&ideal(&r, &["y^2", "x^5"]), 8), OracleValue::Value(10));
        assert_eq!(colength_oracle(&ideal(&r, &["y"]), 10), OracleValue::ExceedsBound);
        assert_eq!(colength_oracle(&ideal(&r, &["1 + x"]), 1), OracleValue::Value(0));
    }

    #[test]
    fn non_monomial() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &["y^2 - x^5", "10*x^5 - 6*y^2"]);
        assert_eq!(colength_oracle_auto(&i, 32), OracleValue::Value(10));
        let i = ideal(&r, &["x^3 + y^7 + x*y^5", "3*x^2 + y^5", "7*y^6 + 5*x*y^4"]);
        assert_eq!(colength_oracle_auto(&i, 32), OracleValue::Value(11));
    }
}
