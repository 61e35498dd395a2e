use super::LocalIdeal;
use crate::error::{Error, Result};
use crate::poly::MPoly;

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
    }
    Ok(cofactor(m, &(0..n).collect::<Vec<_>>(), 0))
}

fn cofactor(m: &[Vec<MPoly>], cols: &[usize], row: usize) -> MPoly {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let ring = m[row][cols[0]].ring();
    let mut acc = MPoly::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        let a = &m[row][c];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = a * &cofactor(m, &rest, row + 1);
        acc = if k % 2 == 0 { &acc + &sub } else { &acc - &sub };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ideal of all `k x k` minors of a matrix with polynomial entries.
pub fn minors(rows: &[Vec<MPoly>], k: usize) -> Result<LocalIdeal> {
    let Some(first) = rows.first().and_then(|r| r.first()) else {
        return Err(Error::ShapeMismatch("empty matrix".into()));
    };
    let ring = first.ring().clone();
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::ShapeMismatch("rows of different lengths".into()));
    }
    if k == 0 || k > rows.len() || k > cols {
        return Err(Error::ShapeMismatch(format!(
            "no {k}x{k} minors in a {}x{cols} matrix",
            rows.len()
        )));
    }
    for r in rows {
        for e in r {
            ring.check_same(e.ring())?;
        }
    }
    let mut gens = Vec::new();
    for rs in subsets(rows.len(), k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<MPoly>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                .collect();
            gens.push(determinant(&sub)?);
        }
    }
    LocalIdeal::new(&ring, gens)
}
