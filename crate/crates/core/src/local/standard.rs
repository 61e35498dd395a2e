//! Mora's tangent cone algorithm.

use std::collections::BTreeMap;

use num_traits::One;

use super::{staircase_count, walk_box, Colength, LocalIdeal};
use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial};

pub const DEFAULT_MAX_STEPS: usize = 200_000;

/// A standard basis of an ideal for the local ordering.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ideal: LocalIdeal,
    basis: Vec<MPoly>,
    leading: Vec<Monomial>,
}

impl StandardBasis {
    pub fn ideal(&self) -> &LocalIdeal {
        &self.ideal
    }

    pub fn basis(&self) -> &[MPoly] {
        &self.basis
    }

    /// Minimal generators of the leading ideal.
    pub fn leading_exponents(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn colength(&self) -> Colength {
        staircase_count(self.ideal.ring().dim(), &self.leading)
    }

    /// True when `m` lies in the leading ideal.
    pub fn in_leading_ideal(&self, m: &Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }
}

struct Engine {
    max_steps: usize,
    steps: usize,
    /// Every term of degree `>= cut` lies in the ideal and may be dropped.
    cut: Option<u32>,
}

impl Engine {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::ResourceLimit(self.max_steps));
        }
        Ok(())
    }

    fn trim(&self, p: &mut MPoly) {
        if let Some(d) = self.cut {
            p.truncate_at_degree(d);
        }
    }

    /// Mora normal form of `f` with respect to `basis`.
    fn normal_form(&mut self, f: MPoly, basis: &[MPoly]) -> Result<MPoly> {
        let mut h = f;
        self.trim(&mut h);
        let mut extra: Vec<MPoly> = Vec::new();
        while let Some(lm) = h.leading_monomial().cloned() {
            let mut best: Option<&MPoly> = None;
            for g in basis.iter().chain(extra.iter()) {
                if g.leading_monomial().is_some_and(|l| l.divides(&lm))
                    && best.is_none_or(|b| g.ecart() < b.ecart())
                {
                    best = Some(g);
                }
            }
            let Some(g) = best else {
                break;
            };
            self.tick()?;
            let g = g.clone();
            if g.ecart() > h.ecart() {
                extra.push(h.clone());
            }
            let (glm, glc) = g.leading().cloned().unwrap();
            let q = lm.checked_div(&glm).unwrap();
            let c = -(h.leading_coeff().unwrap() / &glc);
            h = h.add_scaled(&g, &c, &q);
            self.trim(&mut h);
        }
        Ok(h)
    }
}

/// Drops the non-leading terms of degree `>= d`.
fn trim_tail(g: &mut MPoly, d: u32) {
    if g.ord().is_some_and(|o| o >= d) {
        let lead = g.leading().cloned().unwrap();
        *g = MPoly::monomial(g.ring(), lead.0, lead.1);
    } else {
        g.truncate_at_degree(d);
    }
}

fn spoly(f: &MPoly, g: &MPoly) -> MPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let a = l.checked_div(fm).unwrap();
    let b = l.checked_div(gm).unwrap();
    let one = crate::poly::Coeff::one();
    f.mul_term(&a, &(&one / fc))
        .add_scaled(g, &-(&one / gc), &b)
}

/// Degree bound above which every monomial lies in the leading ideal, when
/// the staircase is finite.
fn corner_cut(n: usize, leading: &[Monomial]) -> Option<u32> {
    let mut bounds = vec![None; n];
    for m in leading {
        if m.is_one() {
            return Some(0);
        }
        if let Some((i, e)) = m.as_pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<u32>>>()?;
    let mut top = 0u32;
    walk_box(&bounds, leading, &mut vec![0; n], 0, &mut |e| {
        top = top.max(e.iter().sum());
    });
    Some(top + 1)
}

fn minimal(leading: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for m in leading {
        if out.iter().any(|o| o.divides(m)) {
            continue;
        }
        out.retain(|o| !m.divides(o));
        out.push(m.clone());
    }
    out.sort();
    out.reverse();
    out
}

/// Standard basis for the local ordering, deterministic for fixed input.
/// Fails with [`Error::ResourceLimit`] after `max_steps` reduction steps.
pub fn standard_basis(ideal: &LocalIdeal, max_steps: usize) -> Result<StandardBasis> {
    let basis = run(ideal, max_steps, None)?;
    let leading = minimal(
        &basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect::<Vec<_>>(),
    );
    Ok(StandardBasis {
        ideal: ideal.clone(),
        basis,
        leading,
    })
}

/// `dim O/(I + m^d)`: the computation runs modulo `m^d`, so every
/// polynomial stays below degree `d`.
pub(crate) fn truncated_colength(ideal: &LocalIdeal, max_steps: usize, d: u32) -> Result<u64> {
    let basis = run(ideal, max_steps, Some(d))?;
    let leading: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    let n = ideal.ring().dim();
    let mut count = 0u64;
    let mut cur = vec![0u32; n];
    count_below(&leading, &mut cur, 0, d, &mut count);
    Ok(count)
}

fn count_below(leading: &[Monomial], cur: &mut Vec<u32>, i: usize, room: u32, count: &mut u64) {
    if i == cur.len() {
        if !leading.iter().any(|l| l.divides(&Monomial::from_exponents(cur))) {
            *count += 1;
        }
        return;
    }
    for e in 0..room {
        cur[i] = e;
        count_below(leading, cur, i + 1, room - e, count);
    }
    cur[i] = 0;
}

fn run(ideal: &LocalIdeal, max_steps: usize, cut: Option<u32>) -> Result<Vec<MPoly>> {
    let n = ideal.ring().dim();
    let mut eng = Engine {
        max_steps,
        steps: 0,
        cut,
    };
    let mut basis: Vec<MPoly> = Vec::new();
    let mut pairs: BTreeMap<(u32, usize), (usize, usize)> = BTreeMap::new();
    let mut seq = 0usize;

    let mut add = |h: MPoly,
                   basis: &mut Vec<MPoly>,
                   pairs: &mut BTreeMap<(u32, usize), (usize, usize)>,
                   eng: &mut Engine| {
        let h = h.monic();
        let hm = h.leading_monomial().unwrap().clone();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gm = g.leading_monomial().unwrap();
            let l = gm.lcm(&hm);
            // coprime leading monomials: the pair reduces to zero
            if l.degree() == gm.degree() + hm.degree() || eng.cut.is_some_and(|c| l.degree() >= c) {
                continue;
            }
            pairs.insert((l.degree(), seq), (i, k));
            seq += 1;
        }
        basis.push(h);
        let leading: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        if let Some(d) = corner_cut(n, &leading) {
            if eng.cut.is_none_or(|c| d < c) {
                eng.cut = Some(d);
                for g in basis.iter_mut() {
                    trim_tail(g, d);
                }
                pairs.retain(|&(deg, _), _| deg < d);
            }
        }
    };

    for g in ideal.gens() {
        let h = eng.normal_form(g.clone(), &basis)?;
        if h.is_zero() {
            continue;
        }
        if h.leading_monomial().is_some_and(Monomial::is_one) {
            basis = vec![h.monic()];
            pairs.clear();
            break;
        }
        add(h, &mut basis, &mut pairs, &mut eng);
    }

    while let Some((_, (i, j))) = pairs.pop_first() {
        if basis.first().is_some_and(|b| b.leading_monomial().is_some_and(Monomial::is_one)) {
            break;
        }
        let s = spoly(&basis[i], &basis[j]);
        let h = eng.normal_form(s, &basis)?;
        if h.is_zero() {
            continue;
        }
        if h.leading_monomial().is_some_and(Monomial::is_one) {
            basis = vec![h.monic()];
            break;
        }
        add(h, &mut basis, &mut pairs, &mut eng);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn sb(r: &Ring, gens: &[&str]) -> StandardBasis {
        let i = LocalIdeal::new(r, gens.iter().map(|g| r.parse(g).unwrap())).unwrap();
        standard_basis(&i, DEFAULT_MAX_STEPS).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn maximal_ideal_is_standard() {
        let r = Ring::new(["x", "y"]).unwrap();
        let b = sb(&r, &["x", "y"]);
        assert_eq!(b.leading_exponents(), &[mono(&[1, 0]), mono(&[0, 1])]);
    }

    #[test]
    fn reduces_second_generator() {
        let r = Ring::new(["x", "y"]).unwrap();
        let b = sb(&r, &["y^2 - x^5", "10*x^5 - 6*y^2"]);
        assert!(b.in_leading_ideal(&mono(&[0, 2])));
        assert!(b.in_leading_ideal(&mono(&[5, 0])));
        assert_eq!(b.colength(), Colength::Finite(10));
    }

    #[test]
    fn unit_generator() {
        let r = Ring::new(["x", "y"]).unwrap();
        // x + x^2 = x(1 + x) and 1 + x is a unit
        let b = sb(&r, &["x + x^2", "y - x^3"]);
        assert_eq!(b.colength(), Colength::Finite(1));
        assert_eq!(sb(&r, &["1 - x*y", "x"]).colength(), Colength::Finite(0));
    }

    #[test]
    fn milnor_of_cusps() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(sb(&r, &["-5*x^4", "2*y"]).colength(), Colength::Finite(4));
        // non-quasihomogeneous E_12-type germ x^3 + y^7 + x*y^5
        let b = sb(&r, &["3*x^2 + y^5", "7*y^6 + 5*x*y^4"]);
        assert_eq!(b.colength(), Colength::Finite(12));
        let b = sb(&r, &["x^3 + y^7 + x*y^5", "3*x^2 + y^5", "7*y^6 + 5*x*y^4"]);
        assert_eq!(b.colength(), Colength::Finite(11));
    }

    #[test]
    fn budget_is_enforced() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = LocalIdeal::new(&r, [r.parse("y^2 - x^5").unwrap(), r.parse("10*x^5 - 6*y^2").unwrap()]).unwrap();
        assert_eq!(standard_basis(&i, 0).unwrap_err(), Error::ResourceLimit(0));
    }
}
