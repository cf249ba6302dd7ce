//! Tensor powers of the algebra, graded permutations, and the two
//! A-bimodule structures on A⊗A.
//!
//! Sign conventions. A graded permutation P_{i₁…iₙ} sends a₁⊗…⊗aₙ to
//! (−1)^t a_{i₁}⊗…⊗a_{iₙ} where t counts, for every pair that changes
//! relative order, the product of the two degrees. The d-shifted variant
//! uses |a|+d in place of |a|. The outer bimodule action is sign-free,
//! a·(x′⊗x″)·b = ax′ ⊗ x″b, while the inner action carries the Koszul
//! factor a∗(x′⊗x″)∗b = (−1)^{|a||b|+|a||x′|+|b||x″|} x′b ⊗ ax″.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Algebra, Word};
use crate::ncpoly::{Degree, NCPoly};
use crate::scalar::{sign_pow, Scalar, Zero};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("inner bimodule action requires homogeneous multipliers")]
    NonHomogeneousInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionMode {
    Outer,
    Inner,
}

/// Finite rational combination of pure tensors of words. Every leg is a
/// single word, hence homogeneous; arity is fixed per value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPoly {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1);
        TensorPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(legs: Vec<Word>, coeff: Scalar) -> Self {
        let mut t = Self::zero(legs.len());
        t.add_term(legs, coeff);
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, coeff: Scalar) {
        assert_eq!(legs.len(), self.arity, "arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (legs, c) in &other.terms {
            out.add_term(legs.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.arity);
        for (legs, c) in &self.terms {
            out.add_term(legs.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        let mut out = Self::zero(self.arity);
        if k.is_zero() {
            return out;
        }
        for (legs, c) in &self.terms {
            out.add_term(legs.clone(), c.clone() * k.clone());
        }
        out
    }

    /// a ⊗ b as an arity-2 value.
    pub fn tensor2(a: &NCPoly, b: &NCPoly) -> Self {
        let mut out = Self::zero(2);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_term(vec![wa.clone(), wb.clone()], ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn tensor3(a: &NCPoly, b: &NCPoly, c: &NCPoly) -> Self {
        let mut out = Self::zero(3);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                for (wc, cc) in c.terms() {
                    out.add_term(
                        vec![wa.clone(), wb.clone(), wc.clone()],
                        ca.clone() * cb.clone() * cc.clone(),
                    );
                }
            }
        }
        out
    }

    /// Extract leg k of every term as (other legs fixed) pairs. Used to
    /// post-compose maps onto one leg.
    pub fn leg(&self, k: usize) -> Vec<(Vec<Word>, Word, Scalar)> {
        self.terms
            .iter()
            .map(|(legs, c)| {
                let mut rest = legs.clone();
                let w = rest.remove(k);
                (rest, w, c.clone())
            })
            .collect()
    }

    /// Multiply leg k on the left by a polynomial.
    pub fn mul_leg_left(&self, k: usize, a: &NCPoly, alg: &Algebra) -> Self {
        let mut out = Self::zero(self.arity);
        for (legs, c) in &self.terms {
            for (wa, ca) in a.terms() {
                if let Some(w) = wa.mul(&legs[k], alg) {
                    let mut nl = legs.clone();
                    nl[k] = w;
                    out.add_term(nl, c.clone() * ca.clone());
                }
            }
        }
        out
    }

    /// Multiply leg k on the right by a polynomial.
    pub fn mul_leg_right(&self, k: usize, b: &NCPoly, alg: &Algebra) -> Self {
        let mut out = Self::zero(self.arity);
        for (legs, c) in &self.terms {
            for (wb, cb) in b.terms() {
                if let Some(w) = legs[k].mul(wb, alg) {
                    let mut nl = legs.clone();
                    nl[k] = w;
                    out.add_term(nl, c.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Graded permutation P_{perm} with the optional degree shift d.
    /// `perm` lists source legs: output leg k is input leg perm[k] (0-based).
    /// The sign for each term is (−1)^t with t the sum of (|a_{i_k}|+d)
    /// (|a_{i_l}|+d) over pairs k < l with i_k > i_l.
    pub fn graded_permute(&self, alg: &Algebra, perm: &[usize], d: i64) -> Self {
        assert_eq!(perm.len(), self.arity, "permutation arity mismatch");
        let mut seen = vec![false; self.arity];
        for &p in perm {
            assert!(p < self.arity && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut out = Self::zero(self.arity);
        for (legs, c) in &self.terms {
            let degs: Vec<i64> = legs.iter().map(|w| w.degree(alg) + d).collect();
            let mut t: i64 = 0;
            for k in 0..perm.len() {
                for l in (k + 1)..perm.len() {
                    if perm[k] > perm[l] {
                        t += degs[perm[k]] * degs[perm[l]];
                    }
                }
            }
            let new_legs: Vec<Word> = perm.iter().map(|&p| legs[p].clone()).collect();
            out.add_term(new_legs, sign_pow(t) * c.clone());
        }
        out
    }

    pub fn display(&self, alg: &Algebra) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (legs, c) in &self.terms {
            let legs_s: Vec<String> = legs.iter().map(|w| w.display(alg)).collect();
            parts.push(format!("({}) * {}", c, legs_s.join(" (x) ")));
        }
        parts.join(" + ")
    }
}

/// The two bimodule actions on arity-2 tensors. Outer is sign-free; inner
/// requires homogeneous a and b because the Koszul factor reads off their
/// degrees.
pub fn bimodule_act(
    alg: &Algebra,
    a: &NCPoly,
    t: &TensorPoly,
    b: &NCPoly,
    mode: ActionMode,
) -> Result<TensorPoly, TensorError> {
    assert_eq!(t.arity(), 2, "bimodule actions are defined on A⊗A");
    match mode {
        ActionMode::Outer => Ok(outer_act(alg, a, t, b)),
        ActionMode::Inner => {
            let da = match a.degree(alg) {
                Degree::Homogeneous(d) => d,
                Degree::Zero => 0,
                Degree::Mixed => return Err(TensorError::NonHomogeneousInput),
            };
            let db = match b.degree(alg) {
                Degree::Homogeneous(d) => d,
                Degree::Zero => 0,
                Degree::Mixed => return Err(TensorError::NonHomogeneousInput),
            };
            Ok(inner_act(alg, a, da, t, b, db))
        }
    }
}

/// a·(x′⊗x″)·b = ax′ ⊗ x″b.
pub fn outer_act(alg: &Algebra, a: &NCPoly, t: &TensorPoly, b: &NCPoly) -> TensorPoly {
    t.mul_leg_left(0, a, alg).mul_leg_right(1, b, alg)
}

/// a∗(x′⊗x″)∗b = (−1)^{|a||b|+|a||x′|+|b||x″|} x′b ⊗ ax″ for homogeneous
/// a, b of the given degrees.
pub fn inner_act(
    alg: &Algebra,
    a: &NCPoly,
    deg_a: i64,
    t: &TensorPoly,
    b: &NCPoly,
    deg_b: i64,
) -> TensorPoly {
    let mut out = TensorPoly::zero(2);
    for (legs, c) in t.terms() {
        let dx0 = legs[0].degree(alg);
        let dx1 = legs[1].degree(alg);
        let sign = sign_pow(deg_a * deg_b + deg_a * dx0 + deg_b * dx1);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                if let (Some(l0), Some(l1)) = (legs[0].mul(wb, alg), wa.mul(&legs[1], alg)) {
                    out.add_term(
                        vec![l0, l1],
                        sign.clone() * c.clone() * ca.clone() * cb.clone(),
                    );
                }
            }
        }
    }
    out
}
