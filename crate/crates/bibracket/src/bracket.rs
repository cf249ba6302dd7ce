//! Bibrackets: generator tables, Leibniz extension, transposes,
//! tribrackets, and the axiom checkers built on them.
//!
//! A bibracket of degree d is determined by its values on generator pairs.
//! Extension to words uses the two Leibniz rules
//!
//!   ⟨⟨a, bc⟩⟩ = ⟨⟨a,b⟩⟩c + (−1)^{|a|_d |b|} b ⟨⟨a,c⟩⟩          (outer action)
//!   ⟨⟨ab, c⟩⟩ = a ∗ ⟨⟨b,c⟩⟩ + (−1)^{|b| |c|_d} ⟨⟨a,c⟩⟩ ∗ b     (inner action)
//!
//! together with ⟨⟨1,−⟩⟩ = ⟨⟨−,1⟩⟩ = 0 and, for invertible degree-0
//! generators, ⟨⟨x⁻¹,c⟩⟩ = −x⁻¹ ∗ ⟨⟨x,c⟩⟩ ∗ x⁻¹ and
//! ⟨⟨a,h⁻¹⟩⟩ = −h⁻¹ ⟨⟨a,h⟩⟩ h⁻¹. Here |a|_d = |a| + d.

pub mod reference;

use std::cell::RefCell;
use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{Algebra, GenId, Letter, Word};
use crate::cyclic;
use crate::expr::{self, ExprError};
use crate::ncpoly::NCPoly;
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::scalar::{int, sign_pow};
use crate::tensor::{inner_act, TensorPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("no table entry for generator pair ({a}, {b})")]
    MissingTableEntry { a: String, b: String },
    #[error("table value for ({a}, {b}) has a term of degree {found}, expected {expected}")]
    TableValueDegree {
        a: String,
        b: String,
        expected: i64,
        found: i64,
    },
    #[error("table value for ({a}, {b}) violates Hom-typing at term {term}")]
    TableValueTyping { a: String, b: String, term: String },
    #[error("table entry references unknown generator `{name}`")]
    UnknownTableGenerator { name: String },
    #[error("bad table expression: {0}")]
    TableExpr(#[from] ExprError),
}

/// A bibracket presentation: the degree and the generator-pair table.
/// Values on inverses and on longer words are derived, never stored.
#[derive(Debug, Clone)]
pub struct BibracketSpec {
    d: i64,
    table: BTreeMap<(GenId, GenId), TensorPoly>,
}

impl BibracketSpec {
    pub fn new(
        alg: &Algebra,
        d: i64,
        entries: Vec<((GenId, GenId), TensorPoly)>,
    ) -> Result<Self, BracketError> {
        let mut table = BTreeMap::new();
        for ((ga, gb), value) in entries {
            let da = alg.decl(ga);
            let db = alg.decl(gb);
            let expected = da.degree + db.degree + d;
            for (legs, _) in value.terms() {
                let found = legs[0].degree(alg) + legs[1].degree(alg);
                if found != expected {
                    return Err(BracketError::TableValueDegree {
                        a: da.name.clone(),
                        b: db.name.clone(),
                        expected,
                        found,
                    });
                }
                // value of (a: X→Y, b: U→V) lies in Hom(U,Y) ⊗ Hom(X,V)
                let ok = legs[0].source() == db.source
                    && legs[0].target(alg) == da.target
                    && legs[1].source() == da.source
                    && legs[1].target(alg) == db.target;
                if !ok {
                    return Err(BracketError::TableValueTyping {
                        a: da.name.clone(),
                        b: db.name.clone(),
                        term: format!(
                            "{} (x) {}",
                            legs[0].display(alg),
                            legs[1].display(alg)
                        ),
                    });
                }
            }
            table.insert((ga, gb), value);
        }
        Ok(BibracketSpec { d, table })
    }

    /// Convenience constructor from expression strings, e.g.
    /// `[("x", "y", "(-1) * x (x) 1")]`.
    pub fn from_exprs(
        alg: &Algebra,
        d: i64,
        entries: &[(&str, &str, &str)],
    ) -> Result<Self, BracketError> {
        let mut list = Vec::new();
        for (a, b, rhs) in entries {
            let ga = alg
                .lookup(a)
                .ok_or_else(|| BracketError::UnknownTableGenerator { name: a.to_string() })?;
            let gb = alg
                .lookup(b)
                .ok_or_else(|| BracketError::UnknownTableGenerator { name: b.to_string() })?;
            let value = expr::parse_tensor2(alg, rhs)?;
            list.push(((ga, gb), value));
        }
        Self::new(alg, d, list)
    }

    pub fn degree_d(&self) -> i64 {
        self.d
    }

    pub fn value(&self, a: GenId, b: GenId) -> Option<&TensorPoly> {
        self.table.get(&(a, b))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(GenId, GenId), &TensorPoly)> {
        self.table.iter()
    }
}

/// Which argument the Leibniz recursion splits first. `SecondFirst` is the
/// production order; `FirstFirst` exists so order independence is a
/// checkable property rather than an assumption.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandOrder {
    SecondFirst,
    FirstFirst,
}

/// Memoizing evaluator for one bibracket over one algebra.
pub struct Evaluator<'a> {
    pub alg: &'a Algebra,
    pub spec: &'a BibracketSpec,
    memo: RefCell<BTreeMap<(Word, Word), TensorPoly>>,
    /// Pairs with more letters than this are recomputed rather than cached,
    /// keeping the cache bounded during deep sweeps.
    memo_max_letters: usize,
}

impl<'a> Evaluator<'a> {
    pub fn new(alg: &'a Algebra, spec: &'a BibracketSpec) -> Self {
        Evaluator {
            alg,
            spec,
            memo: RefCell::new(BTreeMap::new()),
            memo_max_letters: 10,
        }
    }

    pub fn d(&self) -> i64 {
        self.spec.degree_d()
    }

    fn letter_degree(&self, l: Letter) -> i64 {
        self.alg.degree(l.gen)
    }

    fn seq_degree(&self, s: &[Letter]) -> i64 {
        s.iter().map(|&l| self.letter_degree(l)).sum()
    }

    fn seq_poly(&self, s: &[Letter]) -> NCPoly {
        let w = Word::from_letters(self.alg, s.to_vec()).expect("composable sequence");
        NCPoly::from_term(w, int(1))
    }

    /// ⟨⟨a, b⟩⟩ for single letters; handles the inverse rules.
    fn eval_single(&self, la: Letter, lb: Letter) -> Result<TensorPoly, BracketError> {
        if lb.inv {
            let v = self.eval_single(la, lb.positive())?;
            let hi = NCPoly::gen_inv(self.alg, lb.gen);
            return Ok(v
                .mul_leg_left(0, &hi, self.alg)
                .mul_leg_right(1, &hi, self.alg)
                .neg());
        }
        if la.inv {
            let v = self.eval_single(la.positive(), lb)?;
            let xi = NCPoly::gen_inv(self.alg, la.gen);
            return Ok(inner_act(self.alg, &xi, 0, &v, &xi, 0).neg());
        }
        match self.spec.value(la.gen, lb.gen) {
            Some(v) => Ok(v.clone()),
            None => Err(BracketError::MissingTableEntry {
                a: self.alg.decl(la.gen).name.clone(),
                b: self.alg.decl(lb.gen).name.clone(),
            }),
        }
    }

    /// Leibniz evaluation on raw letter sequences. The sequences are NOT
    /// normalized first: `eval_seq(&[x, x⁻¹], c)` really expands the product
    /// x·x⁻¹ by the inner Leibniz rule, which is what the consistency
    /// checks need.
    pub fn eval_seq(
        &self,
        a: &[Letter],
        b: &[Letter],
        order: ExpandOrder,
    ) -> Result<TensorPoly, BracketError> {
        if a.is_empty() || b.is_empty() {
            return Ok(TensorPoly::zero(2));
        }
        if a.len() == 1 && b.len() == 1 {
            return self.eval_single(a[0], b[0]);
        }
        let split_second = match order {
            ExpandOrder::SecondFirst => b.len() > 1,
            ExpandOrder::FirstFirst => a.len() == 1,
        };
        if split_second {
            let (b1, brest) = (&b[..1], &b[1..]);
            let t1 = self.eval_seq(a, b1, order)?;
            let t2 = self.eval_seq(a, brest, order)?;
            let sign = sign_pow((self.seq_degree(a) + self.d()) * self.seq_degree(b1));
            Ok(t1
                .mul_leg_right(1, &self.seq_poly(brest), self.alg)
                .add(&t2.mul_leg_left(0, &self.seq_poly(b1), self.alg).scale(&sign)))
        } else {
            let (a1, arest) = (&a[..1], &a[1..]);
            let t1 = self.eval_seq(arest, b, order)?;
            let t2 = self.eval_seq(a1, b, order)?;
            let one = NCPoly::one(self.alg);
            let left = inner_act(
                self.alg,
                &self.seq_poly(a1),
                self.seq_degree(a1),
                &t1,
                &one,
                0,
            );
            let right = inner_act(
                self.alg,
                &one,
                0,
                &t2,
                &self.seq_poly(arest),
                self.seq_degree(arest),
            );
            let sign = sign_pow(self.seq_degree(arest) * (self.seq_degree(b) + self.d()));
            Ok(left.add(&right.scale(&sign)))
        }
    }

    /// ⟨⟨a, b⟩⟩ for normal-form words, memoized.
    pub fn eval_words(&self, a: &Word, b: &Word) -> Result<TensorPoly, BracketError> {
        if a.is_unit() || b.is_unit() {
            return Ok(TensorPoly::zero(2));
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = self.eval_seq(a.letters(), b.letters(), ExpandOrder::SecondFirst)?;
        if a.len() + b.len() <= self.memo_max_letters {
            self.memo.borrow_mut().insert(key, v.clone());
        }
        Ok(v)
    }

    /// Bilinear extension to polynomials.
    pub fn bb_eval(&self, a: &NCPoly, b: &NCPoly) -> Result<TensorPoly, BracketError> {
        let mut out = TensorPoly::zero(2);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let v = self.eval_words(wa, wb)?;
                out = out.add(&v.scale(&(ca.clone() * cb.clone())));
            }
        }
        Ok(out)
    }

    /// The d-transpose evaluated at (a, b): P₂₁ ∘ ⟨⟨−,−⟩⟩ ∘ P₂₁,d. Equals
    /// −⟨⟨a,b⟩⟩ exactly when the bibracket is d-antisymmetric at (a,b).
    pub fn d_transpose_words(&self, a: &Word, b: &Word) -> Result<TensorPoly, BracketError> {
        let v = self.eval_words(b, a)?;
        let sign = sign_pow((a.degree(self.alg) + self.d()) * (b.degree(self.alg) + self.d()));
        Ok(v.graded_permute(self.alg, &[1, 0], 0).scale(&sign))
    }

    pub fn d_transpose(&self, a: &NCPoly, b: &NCPoly) -> Result<TensorPoly, BracketError> {
        let mut out = TensorPoly::zero(2);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let v = self.d_transpose_words(wa, wb)?;
                out = out.add(&v.scale(&(ca.clone() * cb.clone())));
            }
        }
        Ok(out)
    }

    /// Core of the tribracket: (⟨⟨−,−⟩⟩ ⊗ id)(id ⊗ ⟨⟨−,−⟩⟩) applied
    /// leg-wise, with no extra application signs.
    fn br_br(&self, t: &TensorPoly) -> Result<TensorPoly, BracketError> {
        let mut out = TensorPoly::zero(3);
        for (legs, c) in t.terms() {
            let inner = self.eval_words(&legs[1], &legs[2])?;
            for (ml, ci) in inner.terms() {
                let outer = self.eval_words(&legs[0], &ml[0])?;
                for (kl, co) in outer.terms() {
                    out.add_term(
                        vec![kl[0].clone(), kl[1].clone(), ml[1].clone()],
                        c.clone() * ci.clone() * co.clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Induced tribracket Σᵢ P₃₁₂ⁱ (⟨⟨−,−⟩⟩⊗id)(id⊗⟨⟨−,−⟩⟩) P₃₁₂,d^{−i}
    /// on a⊗b⊗c.
    pub fn tribracket_words(
        &self,
        a: &Word,
        b: &Word,
        c: &Word,
    ) -> Result<TensorPoly, BracketError> {
        let base = TensorPoly::from_term(vec![a.clone(), b.clone(), c.clone()], int(1));
        let d = self.d();
        // out_k = in_{perm[k]}: P₃₁₂ is [2,0,1], P₂₃₁ is [1,2,0];
        // P₃₁₂,d⁻¹ = P₂₃₁,d and P₃₁₂,d⁻² = P₃₁₂,d, while P₃₁₂² = P₂₃₁.
        let stages: [(Option<&[usize]>, Option<&[usize]>); 3] = [
            (None, None),
            (Some(&[1, 2, 0]), Some(&[2, 0, 1])),
            (Some(&[2, 0, 1]), Some(&[1, 2, 0])),
        ];
        let mut total = TensorPoly::zero(3);
        for (pre, post) in stages {
            let staged = match pre {
                Some(p) => base.graded_permute(self.alg, p, d),
                None => base.clone(),
            };
            let core = self.br_br(&staged)?;
            let piece = match post {
                Some(p) => core.graded_permute(self.alg, p, 0),
                None => core,
            };
            total = total.add(&piece);
        }
        Ok(total)
    }

    pub fn tribracket(
        &self,
        a: &NCPoly,
        b: &NCPoly,
        c: &NCPoly,
    ) -> Result<TensorPoly, BracketError> {
        let mut out = TensorPoly::zero(3);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                for (wc, cc) in c.terms() {
                    let v = self.tribracket_words(wa, wb, wc)?;
                    out = out.add(&v.scale(&(ca.clone() * cb.clone() * cc.clone())));
                }
            }
        }
        Ok(out)
    }

    /// Independent expansion of the same tribracket with hand-written
    /// permutation signs; used to cross-check `tribracket_words`.
    pub fn tribracket_explicit(
        &self,
        a: &Word,
        b: &Word,
        c: &Word,
    ) -> Result<TensorPoly, BracketError> {
        let d = self.d();
        let (da, db, dc) = (
            a.degree(self.alg),
            b.degree(self.alg),
            c.degree(self.alg),
        );
        let t = |x: &Word, y: &Word, z: &Word| -> Result<TensorPoly, BracketError> {
            let mut out = TensorPoly::zero(3);
            let inner = self.eval_words(y, z)?;
            for (ml, ci) in inner.terms() {
                let outer = self.eval_words(x, &ml[0])?;
                for (kl, co) in outer.terms() {
                    out.add_term(
                        vec![kl[0].clone(), kl[1].clone(), ml[1].clone()],
                        ci.clone() * co.clone(),
                    );
                }
            }
            Ok(out)
        };
        let p312 = |t: &TensorPoly| {
            let mut out = TensorPoly::zero(3);
            for (l, c) in t.terms() {
                let s = sign_pow(
                    l[2].degree(self.alg) * (l[0].degree(self.alg) + l[1].degree(self.alg)),
                );
                out.add_term(vec![l[2].clone(), l[0].clone(), l[1].clone()], s * c.clone());
            }
            out
        };
        let p231 = |t: &TensorPoly| {
            let mut out = TensorPoly::zero(3);
            for (l, c) in t.terms() {
                let s = sign_pow(
                    l[0].degree(self.alg) * (l[1].degree(self.alg) + l[2].degree(self.alg)),
                );
                out.add_term(vec![l[1].clone(), l[2].clone(), l[0].clone()], s * c.clone());
            }
            out
        };
        let piece0 = t(a, b, c)?;
        let piece1 = p312(&t(b, c, a)?).scale(&sign_pow((da + d) * (db + dc)));
        let piece2 = p231(&t(c, a, b)?).scale(&sign_pow((da + db) * (dc + d)));
        Ok(piece0.add(&piece1).add(&piece2))
    }

    /// Associated bracket ⟨a,b⟩ = ⟨⟨a,b⟩⟩′ ⟨⟨a,b⟩⟩″.
    pub fn assoc_bracket(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, BracketError> {
        Ok(mul_legs(&self.bb_eval(a, b)?, self.alg))
    }

    // ------------------------------------------------------------------
    // checkers

    /// Degree and Hom-typing of evaluated brackets on all word pairs.
    pub fn check_degree(&self, maxlen: usize) -> Result<AxiomReport, BracketError> {
        let words = self.alg.words_up_to(maxlen);
        let mut cases = 0;
        for a in &words {
            for b in &words {
                let v = self.eval_words(a, b)?;
                cases += 1;
                let expected = a.degree(self.alg) + b.degree(self.alg) + self.d();
                for (legs, _) in v.terms() {
                    let found = legs[0].degree(self.alg) + legs[1].degree(self.alg);
                    let typed = legs[0].source() == b.source()
                        && legs[0].target(self.alg) == a.target(self.alg)
                        && legs[1].source() == a.source()
                        && legs[1].target(self.alg) == b.target(self.alg);
                    if found != expected || !typed {
                        return Ok(vec![CheckResult::failed(
                            "degree-and-typing",
                            cases,
                            format!("term of degree {found}, expected {expected}"),
                            self.witness2(a, b, &v, "homogeneous of degree |a|+|b|+d"),
                        )]);
                    }
                }
            }
        }
        Ok(vec![CheckResult::passed(
            "degree-and-typing",
            cases,
            format!(
                "all values homogeneous of degree |a|+|b|+{} and Hom-typed",
                self.d()
            ),
        )])
    }

    /// d-antisymmetry ⟨⟨−,−⟩⟩_d = −⟨⟨−,−⟩⟩ on all word pairs ≤ maxlen.
    pub fn check_antisymmetry(&self, maxlen: usize) -> Result<AxiomReport, BracketError> {
        let words = self.alg.words_up_to(maxlen);
        let mut cases = 0;
        for a in &words {
            for b in &words {
                cases += 1;
                let lhs = self.d_transpose_words(a, b)?;
                let rhs = self.eval_words(a, b)?.neg();
                if lhs != rhs {
                    return Ok(vec![CheckResult::failed(
                        "antisymmetry",
                        cases,
                        "d-transpose differs from negated bracket",
                        Witness {
                            inputs: vec![a.display(self.alg), b.display(self.alg)],
                            lhs: lhs.display(self.alg),
                            rhs: rhs.display(self.alg),
                        },
                    )]);
                }
            }
        }
        Ok(vec![CheckResult::passed(
            "antisymmetry",
            cases,
            "d-transpose equals negated bracket on all pairs",
        )])
    }

    /// (i) products x·x⁻¹ in either slot evaluate to zero through the
    /// Leibniz rules; (ii) expanding in either argument order agrees.
    pub fn check_leibniz_consistency(&self, maxlen: usize) -> Result<AxiomReport, BracketError> {
        let words = self.alg.words_up_to(maxlen);
        let mut out = Vec::new();

        let mut cases = 0;
        let mut failure: Option<Witness> = None;
        'outer: for g in self.alg.gens() {
            if !self.alg.decl(g).invertible {
                continue;
            }
            let pairs = [
                vec![Letter::pos(g), Letter::neg(g)],
                vec![Letter::neg(g), Letter::pos(g)],
            ];
            for seq in &pairs {
                for c in &words {
                    if c.is_unit() {
                        continue;
                    }
                    for (first, second) in
                        [(seq.as_slice(), c.letters()), (c.letters(), seq.as_slice())]
                    {
                        cases += 1;
                        let v = self.eval_seq(first, second, ExpandOrder::SecondFirst)?;
                        if !v.is_zero() {
                            failure = Some(Witness {
                                inputs: vec![
                                    seq_display(self.alg, first),
                                    seq_display(self.alg, second),
                                ],
                                lhs: v.display(self.alg),
                                rhs: "0".into(),
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "inverse-consistency",
                cases,
                "x·x⁻¹ and x⁻¹·x annihilate the bracket in both slots",
            ),
            Some(w) => CheckResult::failed(
                "inverse-consistency",
                cases,
                "Leibniz expansion of x·x⁻¹ is nonzero",
                w,
            ),
        });

        let mut cases = 0;
        let mut failure: Option<Witness> = None;
        'order: for a in &words {
            for b in &words {
                cases += 1;
                let s = self.eval_seq(a.letters(), b.letters(), ExpandOrder::SecondFirst)?;
                let f = self.eval_seq(a.letters(), b.letters(), ExpandOrder::FirstFirst)?;
                if s != f {
                    failure = Some(Witness {
                        inputs: vec![a.display(self.alg), b.display(self.alg)],
                        lhs: s.display(self.alg),
                        rhs: f.display(self.alg),
                    });
                    break 'order;
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "order-independence",
                cases,
                "both Leibniz expansion orders agree on all pairs",
            ),
            Some(w) => CheckResult::failed(
                "order-independence",
                cases,
                "expansion orders disagree",
                w,
            ),
        });

        Ok(out)
    }

    /// Tribracket vanishing on all word triples ≤ maxlen.
    pub fn check_tribracket_vanishing(
        &self,
        maxlen: usize,
    ) -> Result<AxiomReport, BracketError> {
        let words = self.alg.words_up_to(maxlen);
        let mut cases = 0;
        for a in &words {
            for b in &words {
                for c in &words {
                    cases += 1;
                    let v = self.tribracket_words(a, b, c)?;
                    if !v.is_zero() {
                        return Ok(vec![CheckResult::failed(
                            "tribracket-vanishing",
                            cases,
                            "nonzero tribracket",
                            Witness {
                                inputs: vec![
                                    a.display(self.alg),
                                    b.display(self.alg),
                                    c.display(self.alg),
                                ],
                                lhs: v.display(self.alg),
                                rhs: "0".into(),
                            },
                        )]);
                    }
                }
            }
        }
        Ok(vec![CheckResult::passed(
            "tribracket-vanishing",
            cases,
            "tribracket vanishes on all triples",
        )])
    }

    /// Aggregate Gerstenhaber check: degree, antisymmetry, Leibniz
    /// consistency, tribracket vanishing.
    pub fn check_gerstenhaber(&self, maxlen: usize) -> Result<AxiomReport, BracketError> {
        let mut out = Vec::new();
        out.extend(self.check_degree(maxlen)?);
        out.extend(self.check_antisymmetry(maxlen)?);
        out.extend(self.check_leibniz_consistency(maxlen)?);
        out.extend(self.check_tribracket_vanishing(maxlen)?);
        Ok(out)
    }

    /// Properties of the associated bracket ⟨a,b⟩ = m⟨⟨a,b⟩⟩: degree and
    /// the Leibniz rule, antisymmetry modulo commutators (with an explicit
    /// commutator decomposition), commutators annihilating the first slot
    /// and landing in [A,A] from the second, and the Jacobi-deviation
    /// identity against tribracket values.
    pub fn check_assoc_bracket(&self, maxlen: usize) -> Result<AxiomReport, BracketError> {
        let words = self.alg.words_up_to(maxlen);
        let d = self.d();
        let mut out = Vec::new();

        // degree + (poisson1) Leibniz
        let mut cases = 0;
        let mut failure = None;
        'leib: for a in &words {
            for b in &words {
                for c in &words {
                    if b.is_unit() || c.is_unit() {
                        continue;
                    }
                    let Some(bc) = b.mul(c, self.alg) else { continue };
                    cases += 1;
                    let lhs = self.assoc_bracket(
                        &NCPoly::from_term(a.clone(), int(1)),
                        &NCPoly::from_term(bc, int(1)),
                    )?;
                    let br_ab = self.assoc_bracket(
                        &NCPoly::from_term(a.clone(), int(1)),
                        &NCPoly::from_term(b.clone(), int(1)),
                    )?;
                    let br_ac = self.assoc_bracket(
                        &NCPoly::from_term(a.clone(), int(1)),
                        &NCPoly::from_term(c.clone(), int(1)),
                    )?;
                    let sign = sign_pow((a.degree(self.alg) + d) * b.degree(self.alg));
                    let rhs = br_ab
                        .mul(&NCPoly::from_term(c.clone(), int(1)), self.alg)
                        .add(
                            &NCPoly::from_term(b.clone(), int(1))
                                .mul(&br_ac, self.alg)
                                .scale(&sign),
                        );
                    if lhs != rhs {
                        failure = Some(Witness {
                            inputs: vec![
                                a.display(self.alg),
                                b.display(self.alg),
                                c.display(self.alg),
                            ],
                            lhs: lhs.display(self.alg),
                            rhs: rhs.display(self.alg),
                        });
                        break 'leib;
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "assoc-leibniz",
                cases,
                "⟨a,bc⟩ = ⟨a,b⟩c + (−1)^{|a|_d|b|} b⟨a,c⟩ on all triples",
            ),
            Some(w) => CheckResult::failed("assoc-leibniz", cases, "Leibniz rule broken", w),
        });

        // antisymmetry modulo [A,A], with commutator decomposition
        let mut cases = 0;
        let mut failure = None;
        'anti: for a in &words {
            for b in &words {
                cases += 1;
                let ab = self.assoc_bracket(
                    &NCPoly::from_term(a.clone(), int(1)),
                    &NCPoly::from_term(b.clone(), int(1)),
                )?;
                let ba = self.assoc_bracket(
                    &NCPoly::from_term(b.clone(), int(1)),
                    &NCPoly::from_term(a.clone(), int(1)),
                )?;
                let sign =
                    sign_pow((a.degree(self.alg) + d) * (b.degree(self.alg) + d));
                let r = ab.add(&ba.scale(&sign));
                match cyclic::commutator_decomposition(self.alg, &r) {
                    Some(decomp) => {
                        // the decomposition must literally reassemble r
                        let mut rebuilt = NCPoly::zero();
                        for (coeff, u, v) in &decomp {
                            rebuilt = rebuilt.add(
                                &NCPoly::commutator(
                                    &NCPoly::from_term(u.clone(), int(1)),
                                    &NCPoly::from_term(v.clone(), int(1)),
                                    self.alg,
                                )
                                .scale(coeff),
                            );
                        }
                        if rebuilt != r {
                            failure = Some(Witness {
                                inputs: vec![a.display(self.alg), b.display(self.alg)],
                                lhs: r.display(self.alg),
                                rhs: rebuilt.display(self.alg),
                            });
                            break 'anti;
                        }
                    }
                    None => {
                        failure = Some(Witness {
                            inputs: vec![a.display(self.alg), b.display(self.alg)],
                            lhs: r.display(self.alg),
                            rhs: "an element of [A,A]".into(),
                        });
                        break 'anti;
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "assoc-antisymmetry-mod-commutators",
                cases,
                "⟨a,b⟩ + (−1)^{|a|_d|b|_d}⟨b,a⟩ decomposes into commutators",
            ),
            Some(w) => CheckResult::failed(
                "assoc-antisymmetry-mod-commutators",
                cases,
                "symmetrized bracket not a commutator sum",
                w,
            ),
        });

        // ⟨[A,A], A⟩ = 0 and ⟨A, [A,A]⟩ ⊂ [A,A] on commutators of words
        let mut cases = 0;
        let mut failure = None;
        let shorter = self.alg.words_up_to(maxlen.saturating_sub(1));
        'comm: for u in &shorter {
            for v in &shorter {
                if u.is_unit() && v.is_unit() {
                    continue;
                }
                let comm = NCPoly::commutator(
                    &NCPoly::from_term(u.clone(), int(1)),
                    &NCPoly::from_term(v.clone(), int(1)),
                    self.alg,
                );
                for w in &shorter {
                    cases += 1;
                    let wp = NCPoly::from_term(w.clone(), int(1));
                    let left = self.assoc_bracket(&comm, &wp)?;
                    if !left.is_zero() {
                        failure = Some(Witness {
                            inputs: vec![
                                format!(
                                    "commutator of {} and {}",
                                    u.display(self.alg),
                                    v.display(self.alg)
                                ),
                                w.display(self.alg),
                            ],
                            lhs: left.display(self.alg),
                            rhs: "0".into(),
                        });
                        break 'comm;
                    }
                    let right = self.assoc_bracket(&wp, &comm)?;
                    if cyclic::commutator_decomposition(self.alg, &right).is_none() {
                        failure = Some(Witness {
                            inputs: vec![
                                w.display(self.alg),
                                format!(
                                    "commutator of {} and {}",
                                    u.display(self.alg),
                                    v.display(self.alg)
                                ),
                            ],
                            lhs: right.display(self.alg),
                            rhs: "an element of [A,A]".into(),
                        });
                        break 'comm;
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "assoc-commutator-slots",
                cases,
                "⟨[A,A],A⟩ = 0 and ⟨A,[A,A]⟩ ⊂ [A,A]",
            ),
            Some(w) => CheckResult::failed(
                "assoc-commutator-slots",
                cases,
                "commutator slot property broken",
                w,
            ),
        });

        // Jacobi deviation: ⟨⟨a,b⟩,c⟩ − ⟨a,⟨b,c⟩⟩ + (−1)^{|a|_d|b|_d}⟨b,⟨a,c⟩⟩
        //   = m((−1)^{|a|_d|b|_d}⟨⟨b,a,c⟩⟩ − ⟨⟨a,b,c⟩⟩)
        let mut cases = 0;
        let mut failure = None;
        'jac: for a in &words {
            for b in &words {
                for c in &words {
                    cases += 1;
                    let pa = NCPoly::from_term(a.clone(), int(1));
                    let pb = NCPoly::from_term(b.clone(), int(1));
                    let pc = NCPoly::from_term(c.clone(), int(1));
                    let sign =
                        sign_pow((a.degree(self.alg) + d) * (b.degree(self.alg) + d));
                    let lhs = self
                        .assoc_bracket(&self.assoc_bracket(&pa, &pb)?, &pc)?
                        .sub(&self.assoc_bracket(&pa, &self.assoc_bracket(&pb, &pc)?)?)
                        .add(
                            &self
                                .assoc_bracket(&pb, &self.assoc_bracket(&pa, &pc)?)?
                                .scale(&sign),
                        );
                    let rhs = mul_legs(
                        &self
                            .tribracket_words(b, a, c)?
                            .scale(&sign)
                            .sub(&self.tribracket_words(a, b, c)?),
                        self.alg,
                    );
                    if lhs != rhs {
                        failure = Some(Witness {
                            inputs: vec![
                                a.display(self.alg),
                                b.display(self.alg),
                                c.display(self.alg),
                            ],
                            lhs: lhs.display(self.alg),
                            rhs: rhs.display(self.alg),
                        });
                        break 'jac;
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "assoc-jacobi-deviation",
                cases,
                "Jacobiator equals the tribracket expression on all triples",
            ),
            Some(w) => CheckResult::failed(
                "assoc-jacobi-deviation",
                cases,
                "deviation identity broken",
                w,
            ),
        });

        Ok(out)
    }

    fn witness2(&self, a: &Word, b: &Word, v: &TensorPoly, expected: &str) -> Witness {
        Witness {
            inputs: vec![a.display(self.alg), b.display(self.alg)],
            lhs: v.display(self.alg),
            rhs: expected.to_string(),
        }
    }
}

/// Multiply all legs of a tensor into the algebra (m for arity 2, m₃ for
/// arity 3): z′⊗z″⊗… ↦ z′z″⋯.
pub fn mul_legs(t: &TensorPoly, alg: &Algebra) -> NCPoly {
    let mut out = NCPoly::zero();
    for (legs, c) in t.terms() {
        let mut acc = Some(legs[0].clone());
        for leg in &legs[1..] {
            acc = acc.and_then(|w| w.mul(leg, alg));
        }
        if let Some(w) = acc {
            out.add_term(w, c.clone());
        }
    }
    out
}

fn seq_display(alg: &Algebra, s: &[Letter]) -> String {
    if s.is_empty() {
        return "1".to_string();
    }
    s.iter()
        .map(|l| {
            let name = &alg.decl(l.gen).name;
            if l.inv {
                format!("{name}^-1")
            } else {
                name.clone()
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl Letter {
    pub fn pos(g: GenId) -> Letter {
        Letter { gen: g, inv: false }
    }

    pub fn neg(g: GenId) -> Letter {
        Letter { gen: g, inv: true }
    }
}

/// Sample a d-antisymmetric bibracket on the generators of `alg`: raw
/// table values are drawn for pairs a ≤ b and the opposite entries are
/// forced by the flip rule, so d-antisymmetry holds by construction. Legs
/// are words of the matching degree with length ≤ 3.
pub fn random_antisymmetric_spec(
    alg: &Algebra,
    d: i64,
    rng: &mut impl Rng,
) -> Result<BibracketSpec, BracketError> {
    let pool = alg.words_up_to(3);
    let gens: Vec<GenId> = alg.gens().collect();
    let mut entries: BTreeMap<(GenId, GenId), TensorPoly> = BTreeMap::new();
    for (i, &ga) in gens.iter().enumerate() {
        for &gb in &gens[i..] {
            let target = alg.degree(ga) + alg.degree(gb) + d;
            let mut value = TensorPoly::zero(2);
            for l0 in &pool {
                for l1 in &pool {
                    if l0.degree(alg) + l1.degree(alg) != target {
                        continue;
                    }
                    if rng.gen_range(0..4) == 0 {
                        let c = *[-2i64, -1, 1, 2]
                            .get(rng.gen_range(0..4))
                            .expect("coeff pool");
                        value.add_term(vec![l0.clone(), l1.clone()], int(c));
                    }
                }
            }
            // flip(v) = −(−1)^{|a|_d|b|_d} P₂₁ v is the d-transpose of the
            // opposite entry; the pair (value, flip(value)) is consistent,
            // and the diagonal needs the flip-symmetrized average.
            let flip = |v: &TensorPoly, da: i64, db: i64| {
                v.graded_permute(alg, &[1, 0], 0)
                    .scale(&sign_pow((da + d) * (db + d)))
                    .neg()
            };
            let (da, db) = (alg.degree(ga), alg.degree(gb));
            if ga == gb {
                let sym = value.add(&flip(&value, da, db)).scale(&crate::scalar::ratio(1, 2));
                entries.insert((ga, gb), sym);
            } else {
                entries.insert((gb, ga), flip(&value, da, db));
                entries.insert((ga, gb), value);
            }
        }
    }
    BibracketSpec::new(alg, d, entries.into_iter().collect())
}

/// True when the tribracket vanishes on all generator triples; random
/// specs that fail this are certified non-Gerstenhaber.
pub fn gerstenhaber_on_generators(
    alg: &Algebra,
    spec: &BibracketSpec,
) -> Result<bool, BracketError> {
    let ev = Evaluator::new(alg, spec);
    let gens: Vec<Word> = alg.gens().map(|g| Word::gen(alg, g)).collect();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                if !ev.tribracket_words(a, b, c)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::single_object;
    use crate::expr::parse_tensor2;
    use crate::report::all_pass;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Degree-0 invertible x, degree n−2 generator y, bracket degree 2−n.
    fn laurent_fixture(n: i64) -> (Algebra, BibracketSpec) {
        let (alg, _) = single_object(&[("x", 0, true), ("y", n - 2, false)]);
        let spec = BibracketSpec::from_exprs(
            &alg,
            2 - n,
            &[
                ("x", "x", "0"),
                ("x", "y", "(-1) * x (x) 1"),
                ("y", "x", "1 (x) x"),
                ("y", "y", "1 (x) y - y (x) 1"),
            ],
        )
        .unwrap();
        (alg, spec)
    }

    /// Degree p−1 and q−1 generators with constant bracket values,
    /// bracket degree 2−(p+q).
    fn sphere_fixture(p: i64, q: i64) -> (Algebra, BibracketSpec) {
        let (alg, _) = single_object(&[("x", p - 1, false), ("y", q - 1, false)]);
        let cxy = if (q * (p + 1) + 1).rem_euclid(2) == 0 { "1 (x) 1" } else { "(-1) * 1 (x) 1" };
        let cyx = if (p + 1).rem_euclid(2) == 0 { "1 (x) 1" } else { "(-1) * 1 (x) 1" };
        let spec = BibracketSpec::from_exprs(
            &alg,
            2 - (p + q),
            &[("x", "x", "0"), ("x", "y", cxy), ("y", "x", cyx), ("y", "y", "0")],
        )
        .unwrap();
        (alg, spec)
    }

    #[test]
    fn rejects_bad_degree_and_typing() {
        let (alg, _) = single_object(&[("x", 0, true), ("y", 1, false)]);
        let err = BibracketSpec::from_exprs(&alg, -1, &[("x", "y", "y (x) 1")]).unwrap_err();
        assert!(matches!(err, BracketError::TableValueDegree { .. }));

        // quiver: f: s→t and g: t→s; a value g⊗g for (f,f) has the right
        // degree but the wrong Hom-typing
        let mut alg2 = Algebra::new();
        let s = alg2.object("s");
        let t = alg2.object("t");
        let f = alg2
            .add_generator(crate::algebra::GeneratorDecl {
                name: "f".into(),
                degree: 1,
                source: s,
                target: t,
                invertible: false,
            })
            .unwrap();
        let g = alg2
            .add_generator(crate::algebra::GeneratorDecl {
                name: "g".into(),
                degree: 1,
                source: t,
                target: s,
                invertible: false,
            })
            .unwrap();
        let good = TensorPoly::from_term(
            vec![Word::gen(&alg2, f), Word::gen(&alg2, f)],
            int(1),
        );
        assert!(BibracketSpec::new(&alg2, 0, vec![((f, f), good)]).is_ok());
        let bad = TensorPoly::from_term(
            vec![Word::gen(&alg2, g), Word::gen(&alg2, g)],
            int(1),
        );
        let err = BibracketSpec::new(&alg2, 0, vec![((f, f), bad)]).unwrap_err();
        assert!(matches!(err, BracketError::TableValueTyping { .. }));
    }

    #[test]
    fn missing_entry_is_reported() {
        let (alg, ids) = single_object(&[("x", 0, true), ("y", 1, false)]);
        let spec = BibracketSpec::from_exprs(&alg, -1, &[("x", "y", "(-1) * x (x) 1")]).unwrap();
        let ev = Evaluator::new(&alg, &spec);
        let y = Word::gen(&alg, ids[1]);
        let err = ev.eval_words(&y, &y).unwrap_err();
        assert!(matches!(err, BracketError::MissingTableEntry { .. }));
    }

    #[test]
    fn laurent_bracket_values() {
        for n in [3i64, 4] {
            let (alg, spec) = laurent_fixture(n);
            let ev = Evaluator::new(&alg, &spec);
            let x = NCPoly::gen(&alg, alg.lookup("x").unwrap());
            let y = NCPoly::gen(&alg, alg.lookup("y").unwrap());

            // ⟨⟨x, y²⟩⟩ = −x⊗y − (−1)ⁿ yx⊗1
            let lhs = ev.bb_eval(&x, &y.mul(&y, &alg)).unwrap();
            let rhs_str = if n % 2 == 0 {
                "(-1) * x (x) y - y*x (x) 1"
            } else {
                "(-1) * x (x) y + y*x (x) 1"
            };
            assert_eq!(lhs, parse_tensor2(&alg, rhs_str).unwrap(), "n={n}");

            // ⟨⟨x⁻¹, y⟩⟩ = 1⊗x⁻¹
            let xi = NCPoly::gen_inv(&alg, alg.lookup("x").unwrap());
            let lhs = ev.bb_eval(&xi, &y).unwrap();
            assert_eq!(lhs, parse_tensor2(&alg, "1 (x) x^-1").unwrap());

            // unit annihilates
            assert!(ev.bb_eval(&NCPoly::one(&alg), &y).unwrap().is_zero());
            assert!(ev.bb_eval(&y, &NCPoly::one(&alg)).unwrap().is_zero());
        }
    }

    #[test]
    fn laurent_assoc_bracket_values() {
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        let x = NCPoly::gen(&alg, alg.lookup("x").unwrap());
        let y = NCPoly::gen(&alg, alg.lookup("y").unwrap());
        assert_eq!(ev.assoc_bracket(&x, &y).unwrap(), x.neg());
        assert_eq!(ev.assoc_bracket(&y, &x).unwrap(), x);
        assert!(ev.assoc_bracket(&y, &y).unwrap().is_zero());
        assert!(ev.assoc_bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn gerstenhaber_sweeps_pass() {
        for (alg, spec) in [laurent_fixture(3), laurent_fixture(4), sphere_fixture(2, 3)] {
            let ev = Evaluator::new(&alg, &spec);
            let report = ev.check_gerstenhaber(3).unwrap();
            assert!(all_pass(&report), "{report:?}");
        }
    }

    #[test]
    fn transpose_is_an_involution() {
        let (alg, spec) = laurent_fixture(4);
        let ev = Evaluator::new(&alg, &spec);
        for a in alg.words_up_to(2) {
            for b in alg.words_up_to(2) {
                // apply the transpose construction twice by hand
                let once_ba = ev.d_transpose_words(&b, &a).unwrap();
                let sign = sign_pow(
                    (a.degree(&alg) + ev.d()) * (b.degree(&alg) + ev.d()),
                );
                let twice = once_ba.graded_permute(&alg, &[1, 0], 0).scale(&sign);
                assert_eq!(twice, ev.eval_words(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn transposed_bracket_satisfies_second_leibniz() {
        // if f satisfies the outer rule, its d-transpose satisfies the
        // inner rule on the same pairs
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        let words = alg.words_up_to(2);
        let one = NCPoly::one(&alg);
        for a in &words {
            for b in &words {
                if a.is_unit() || b.is_unit() {
                    continue;
                }
                for c in &words {
                    let Some(ab) = a.mul(b, &alg) else { continue };
                    let lhs = ev.d_transpose_words(&ab, c).unwrap();
                    let ta = ev.d_transpose_words(a, c).unwrap();
                    let tb = ev.d_transpose_words(b, c).unwrap();
                    let rhs = inner_act(
                        &alg,
                        &NCPoly::from_term(a.clone(), int(1)),
                        a.degree(&alg),
                        &tb,
                        &one,
                        0,
                    )
                    .add(
                        &inner_act(
                            &alg,
                            &one,
                            0,
                            &ta,
                            &NCPoly::from_term(b.clone(), int(1)),
                            b.degree(&alg),
                        )
                        .scale(&sign_pow(
                            b.degree(&alg) * (c.degree(&alg) + ev.d()),
                        )),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn tribracket_forms_agree() {
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        let words = alg.words_up_to(2);
        for a in &words {
            for b in &words {
                for c in &words {
                    assert_eq!(
                        ev.tribracket_words(a, b, c).unwrap(),
                        ev.tribracket_explicit(a, b, c).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn perturbed_table_fails_with_witness() {
        let (alg, _) = single_object(&[("x", 0, true), ("y", 1, false)]);
        // break ⟨⟨y,x⟩⟩ by a sign
        let spec = BibracketSpec::from_exprs(
            &alg,
            -1,
            &[
                ("x", "x", "0"),
                ("x", "y", "(-1) * x (x) 1"),
                ("y", "x", "(-1) * 1 (x) x"),
                ("y", "y", "1 (x) y - y (x) 1"),
            ],
        )
        .unwrap();
        let ev = Evaluator::new(&alg, &spec);
        let report = ev.check_antisymmetry(1).unwrap();
        assert!(!all_pass(&report));
        let w = report[0].witness.as_ref().unwrap();
        // the witness re-evaluates to the reported discrepancy
        let a = expr::parse_word(&alg, &w.inputs[0]).unwrap();
        let b = expr::parse_word(&alg, &w.inputs[1]).unwrap();
        let lhs = ev.d_transpose_words(&a, &b).unwrap();
        assert_eq!(lhs.display(&alg), w.lhs);
    }

    #[test]
    fn assoc_bracket_properties_hold() {
        for (alg, spec) in [laurent_fixture(3), sphere_fixture(2, 3)] {
            let ev = Evaluator::new(&alg, &spec);
            let report = ev.check_assoc_bracket(2).unwrap();
            assert!(all_pass(&report), "{report:?}");
        }
    }

    #[test]
    fn random_specs_are_antisymmetric() {
        let (alg, _) = single_object(&[("u", 1, false), ("v", 2, false)]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in [-2i64, 0, 1] {
            let spec = random_antisymmetric_spec(&alg, d, &mut rng).unwrap();
            let ev = Evaluator::new(&alg, &spec);
            let report = ev.check_antisymmetry(2).unwrap();
            assert!(all_pass(&report));
            let report = ev.check_leibniz_consistency(2).unwrap();
            assert!(all_pass(&report));
        }
    }
}
