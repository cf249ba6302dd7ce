//! Noncommutative polynomials: finite rational combinations of words.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, GenId, ObjId, Word};
use crate::scalar::{sign_pow, Scalar, Zero};

/// Degree report of a polynomial. Zero polynomials have arbitrary degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The unit e_X of one object.
    pub fn unit_at(obj: ObjId) -> Self {
        Self::from_term(Word::unit(obj), Scalar::from_integer(1.into()))
    }

    /// The algebra unit 1 = Σ_X e_X over all declared objects.
    pub fn one(alg: &Algebra) -> Self {
        let mut p = Self::zero();
        for x in alg.objects() {
            p.add_term(Word::unit(x), Scalar::from_integer(1.into()));
        }
        p
    }

    pub fn gen(alg: &Algebra, g: GenId) -> Self {
        Self::from_term(Word::gen(alg, g), Scalar::from_integer(1.into()))
    }

    pub fn gen_inv(alg: &Algebra, g: GenId) -> Self {
        Self::from_term(Word::gen_inv(alg, g), Scalar::from_integer(1.into()))
    }

    pub fn from_term(word: Word, coeff: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self, alg: &Algebra) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                if let Some(w) = wa.mul(wb, alg) {
                    out.add_term(w, ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32, alg: &Algebra) -> Self {
        let mut out = Self::one(alg);
        for _ in 0..n {
            out = out.mul(self, alg);
        }
        out
    }

    pub fn degree(&self, alg: &Algebra) -> Degree {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Degree::Zero,
            Some(w) => w.degree(alg),
        };
        if it.all(|w| w.degree(alg) == first) {
            Degree::Homogeneous(first)
        } else {
            Degree::Mixed
        }
    }

    pub fn homogeneous_components(&self, alg: &Algebra) -> BTreeMap<i64, NCPoly> {
        let mut out: BTreeMap<i64, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree(alg))
                .or_default()
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba of homogeneous
    /// inputs; degrees are taken per word pair, so any inputs are accepted
    /// and the commutator is extended bilinearly.
    pub fn commutator(a: &Self, b: &Self, alg: &Algebra) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let c = ca.clone() * cb.clone();
                if let Some(w) = wa.mul(wb, alg) {
                    out.add_term(w, c.clone());
                }
                if let Some(w) = wb.mul(wa, alg) {
                    let sign = sign_pow(wa.degree(alg) * wb.degree(alg));
                    out.add_term(w, -sign * c);
                }
            }
        }
        out
    }

    pub fn display(&self, alg: &Algebra) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            parts.push(format!("({}) * {}", c, w.display(alg)));
        }
        parts.join(" + ")
    }
}
