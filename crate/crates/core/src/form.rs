use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{Coeff, MPoly, Parser, Ring};

/// Polynomial 1-form `Σ A_i dx_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OneForm {
    ring: Ring,
    coeffs: Vec<MPoly>,
}

impl OneForm {
    pub fn new(coeffs: Vec<MPoly>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::InvalidInput("a 1-form needs coefficients".into()));
        };
        let ring = first.ring().clone();
        if coeffs.len() != ring.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for a ring of dimension {}",
                coeffs.len(),
                ring.dim()
            )));
        }
        for c in &coeffs {
            ring.check_same(c.ring())?;
        }
        Ok(OneForm { ring, coeffs })
    }

    /// The differential `df`.
    pub fn exact(f: &MPoly) -> Self {
        OneForm {
            ring: f.ring().clone(),
            coeffs: f.gradient(),
        }
    }

    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        let coeffs = Parser::new(text, ring)?.parse_form()?;
        Ok(OneForm {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &MPoly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }

    /// `ω(ξ) = Σ A_i ξ_i` for a vector field given by its components.
    pub fn evaluate(&self, field: &[MPoly]) -> Result<MPoly> {
        if field.len() != self.coeffs.len() {
            return Err(Error::ShapeMismatch(format!(
                "vector field has {} components, expected {}",
                field.len(),
                self.coeffs.len()
            )));
        }
        let mut acc = MPoly::zero(&self.ring);
        for (a, xi) in self.coeffs.iter().zip(field) {
            self.ring.check_same(xi.ring())?;
            acc = &acc + &(a * xi);
        }
        Ok(acc)
    }

    /// Coefficients `C_jk = A_j ∂_k φ - A_k ∂_j φ` of `ω ∧ dφ` for `j < k`,
    /// in lexicographic order of `(j, k)`.
    pub fn wedge_coeffs(&self, phi: &MPoly) -> Result<Vec<MPoly>> {
        self.ring.check_same(phi.ring())?;
        let grad = phi.gradient();
        let n = self.ring.dim();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 0..n {
            for k in j + 1..n {
                out.push(&(&self.coeffs[j] * &grad[k]) - &(&self.coeffs[k] * &grad[j]));
            }
        }
        Ok(out)
    }

    /// Moves the point `shift` to the origin.
    pub fn translate(&self, shift: &[Coeff]) -> OneForm {
        OneForm {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a.translate(shift)).collect(),
        }
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let v = self.ring.var_name(i);
            let single = a.num_terms() == 1;
            let neg = single && a.leading_coeff().is_some_and(Signed::is_negative);
            let body = if neg { -a } else { a.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if body.is_constant() && body.constant_term().is_one() {
                write!(f, "d{v}")?;
            } else if single {
                write!(f, "{body} d{v}")?;
            } else {
                write!(f, "({body}) d{v}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneForm({self})")
    }
}
