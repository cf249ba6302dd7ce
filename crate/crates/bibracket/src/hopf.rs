//! Hopf structure on a quiver algebra: coproducts, counits, antipodes,
//! and the pairings Λ and λ attached to a bibracket.
//!
//! A `HopfDecl` assigns each generator a coproduct kind. The coproduct
//! extends to words as an algebra map for the twisted product
//!
//!   (a₁⊗a₂)(b₁⊗b₂) = (-1)^{|a₂||b₁|} a₁b₁ ⊗ a₂b₂
//!
//! and the antipode extends antimultiplicatively. All declared data is
//! validated on generators at construction time, and `check_hopf` sweeps
//! the axioms over words of bounded length.
//!
//! For a bibracket F on the same algebra,
//!
//!   Λ(a,b) = a⁽¹⁾ s(⟨⟨a⁽²⁾,b⁽¹⁾⟩⟩′) ⊗ ⟨⟨a⁽²⁾,b⁽¹⁾⟩⟩″ s(b⁽²⁾)
//!
//! and λ = (ε⊗id)Λ. F is reducible when Λ lands in the image of Δ;
//! `check_reducible` tests this via Δ(λ) = Λ and, on success, the
//! compatibility identities tying s, Λ, λ and the bracket together.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Algebra, GenId, Letter, ObjId, Word};
use crate::bracket::{BibracketSpec, BracketError, Evaluator};
use crate::ncpoly::NCPoly;
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::scalar::{sign_pow, One, Scalar, Zero};
use crate::tensor::TensorPoly;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("unknown generator `{name}` in Hopf declaration")]
    UnknownGenerator { name: String },
    #[error("generator `{name}` declared twice")]
    DuplicateGenerator { name: String },
    #[error("Hopf declaration does not cover generator `{name}`")]
    MissingGenerator { name: String },
    #[error("group-like `{name}` must be an invertible generator of degree 0")]
    GroupLikeNotInvertible { name: String },
    #[error("primitive `{name}` must be a loop (source = target)")]
    PrimitiveNotLoop { name: String },
    #[error("invertible generator `{name}` must be declared group-like")]
    InvertibleNotGroupLike { name: String },
    #[error("explicit coproduct of `{name}` must have arity 2, got {arity}")]
    CoproductArity { name: String, arity: usize },
    #[error("coproduct term {term} of `{name}` breaks degree or typing")]
    CoproductShape { name: String, term: String },
    #[error("counit of `{name}` must vanish in nonzero degree")]
    CounitDegree { name: String },
    #[error("antipode of `{name}` must be homogeneous of degree {degree} in Hom(target, source)")]
    AntipodeShape { name: String, degree: i64 },
    #[error("{axiom} fails on generator `{name}`: {lhs} != {rhs}")]
    GeneratorAxiom {
        axiom: String,
        name: String,
        lhs: String,
        rhs: String,
    },
    #[error("scalar form needs a counit and none is declared")]
    CounitUndefined,
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// How Δ acts on one generator. Primitive means Δg = g⊗1 + 1⊗g, group-like
/// means Δg = g⊗g (with ε = 1 and s(g) = g⁻¹ forced by the axioms), and
/// `Explicit` carries the full data.
#[derive(Debug, Clone)]
pub enum CoproductKind {
    Primitive,
    GroupLike,
    Explicit {
        cop: TensorPoly,
        counit: Scalar,
        antipode: NCPoly,
    },
}

#[derive(Debug, Clone)]
pub struct HopfDecl {
    kinds: BTreeMap<GenId, CoproductKind>,
}

impl HopfDecl {
    /// Build and validate a declaration covering every generator. Validation
    /// is mechanical: shape constraints first, then the counit, antipode and
    /// coassociativity axioms evaluated on each generator.
    pub fn from_kinds(alg: &Algebra, kinds: &[(&str, CoproductKind)]) -> Result<Self, HopfError> {
        let mut map = BTreeMap::new();
        for (name, kind) in kinds {
            let g = alg
                .lookup(name)
                .ok_or_else(|| HopfError::UnknownGenerator { name: name.to_string() })?;
            if map.insert(g, kind.clone()).is_some() {
                return Err(HopfError::DuplicateGenerator { name: name.to_string() });
            }
        }
        for g in alg.gens() {
            if !map.contains_key(&g) {
                return Err(HopfError::MissingGenerator {
                    name: alg.decl(g).name.clone(),
                });
            }
        }

        for (&g, kind) in &map {
            let decl = alg.decl(g);
            let name = decl.name.clone();
            if decl.invertible && !matches!(kind, CoproductKind::GroupLike) {
                return Err(HopfError::InvertibleNotGroupLike { name });
            }
            match kind {
                CoproductKind::GroupLike => {
                    if !decl.invertible || decl.degree != 0 {
                        return Err(HopfError::GroupLikeNotInvertible { name });
                    }
                }
                CoproductKind::Primitive => {
                    if decl.source != decl.target {
                        return Err(HopfError::PrimitiveNotLoop { name });
                    }
                }
                CoproductKind::Explicit { cop, counit, antipode } => {
                    if cop.arity() != 2 {
                        return Err(HopfError::CoproductArity {
                            name,
                            arity: cop.arity(),
                        });
                    }
                    // Δ carries Hom(X,Y) into Hom(X,Y)⊗Hom(X,Y) and preserves
                    // the total degree.
                    for (legs, _) in cop.terms() {
                        let ok = legs[0].source() == decl.source
                            && legs[0].target(alg) == decl.target
                            && legs[1].source() == decl.source
                            && legs[1].target(alg) == decl.target
                            && legs[0].degree(alg) + legs[1].degree(alg) == decl.degree;
                        if !ok {
                            return Err(HopfError::CoproductShape {
                                name,
                                term: format!(
                                    "{} (x) {}",
                                    legs[0].display(alg),
                                    legs[1].display(alg)
                                ),
                            });
                        }
                    }
                    if decl.degree != 0 && !counit.is_zero() {
                        return Err(HopfError::CounitDegree { name });
                    }
                    // s maps Hom(X,Y) to Hom(Y,X) preserving degree.
                    for (w, _) in antipode.terms() {
                        let ok = w.source() == decl.target
                            && w.target(alg) == decl.source
                            && (w.degree(alg) == decl.degree || decl.degree == 0 && w.is_unit());
                        if !ok {
                            return Err(HopfError::AntipodeShape {
                                name,
                                degree: decl.degree,
                            });
                        }
                    }
                }
            }
        }

        let h = HopfDecl { kinds: map };
        h.validate_generator_axioms(alg)?;
        Ok(h)
    }

    pub fn kind(&self, g: GenId) -> &CoproductKind {
        &self.kinds[&g]
    }

    /// True when every generator is primitive or group-like. Such
    /// declarations are cocommutative by construction.
    pub fn all_standard(&self) -> bool {
        self.kinds
            .values()
            .all(|k| !matches!(k, CoproductKind::Explicit { .. }))
    }

    fn validate_generator_axioms(&self, alg: &Algebra) -> Result<(), HopfError> {
        for g in alg.gens() {
            let name = alg.decl(g).name.clone();
            let gp = NCPoly::gen(alg, g);
            let cop = self.coproduct(alg, &gp)?;

            let left = self.counit_contract(alg, &cop, 0);
            let right = self.counit_contract(alg, &cop, 1);
            if left != gp || right != gp {
                return Err(HopfError::GeneratorAxiom {
                    axiom: "counit axiom".into(),
                    name,
                    lhs: left.display(alg),
                    rhs: gp.display(alg),
                });
            }

            let conv_r = self.convolve_id_s(alg, &cop)?;
            let eps_in = self.eps_in(alg, &gp);
            if conv_r != eps_in {
                return Err(HopfError::GeneratorAxiom {
                    axiom: "antipode axiom".into(),
                    name,
                    lhs: conv_r.display(alg),
                    rhs: eps_in.display(alg),
                });
            }
            let conv_l = self.convolve_s_id(alg, &cop)?;
            let eps_out = self.eps_out(alg, &gp);
            if conv_l != eps_out {
                return Err(HopfError::GeneratorAxiom {
                    axiom: "antipode axiom".into(),
                    name,
                    lhs: conv_l.display(alg),
                    rhs: eps_out.display(alg),
                });
            }

            let l = self.coproduct_leg(alg, &cop, 0)?;
            let r = self.coproduct_leg(alg, &cop, 1)?;
            if l != r {
                return Err(HopfError::GeneratorAxiom {
                    axiom: "coassociativity".into(),
                    name,
                    lhs: l.display(alg),
                    rhs: r.display(alg),
                });
            }
        }
        Ok(())
    }

    fn letter_coproduct(&self, alg: &Algebra, l: Letter) -> TensorPoly {
        let decl = alg.decl(l.gen);
        match (&self.kinds[&l.gen], l.inv) {
            (CoproductKind::GroupLike, _) => {
                let w = Word::from_letters(alg, vec![l]).expect("single letter");
                TensorPoly::from_term(vec![w.clone(), w], Scalar::one())
            }
            (CoproductKind::Primitive, false) => {
                let w = Word::gen(alg, l.gen);
                let e = Word::unit(decl.source);
                let mut t = TensorPoly::from_term(vec![w.clone(), e.clone()], Scalar::one());
                t.add_term(vec![e, w], Scalar::one());
                t
            }
            (CoproductKind::Explicit { cop, .. }, false) => cop.clone(),
            // Inverse letters only exist for invertible generators, which
            // validation forces to be group-like.
            (_, true) => unreachable!("inverse letter of a non-group-like generator"),
        }
    }

    fn word_coproduct(&self, alg: &Algebra, w: &Word) -> TensorPoly {
        if w.is_unit() {
            let e = Word::unit(w.source());
            return TensorPoly::from_term(vec![e.clone(), e], Scalar::one());
        }
        let mut acc: Option<TensorPoly> = None;
        for &l in w.letters() {
            let dl = self.letter_coproduct(alg, l);
            acc = Some(match acc {
                None => dl,
                Some(t) => twisted_mul(alg, &t, &dl),
            });
        }
        acc.expect("nonempty word")
    }

    pub fn coproduct(&self, alg: &Algebra, a: &NCPoly) -> Result<TensorPoly, HopfError> {
        let mut out = TensorPoly::zero(2);
        for (w, c) in a.terms() {
            out = out.add(&self.word_coproduct(alg, w).scale(c));
        }
        Ok(out)
    }

    pub fn counit_word(&self, alg: &Algebra, w: &Word) -> Scalar {
        let _ = alg;
        let mut acc = Scalar::one();
        for l in w.letters() {
            let v = match &self.kinds[&l.gen] {
                CoproductKind::GroupLike => Scalar::one(),
                CoproductKind::Primitive => Scalar::zero(),
                CoproductKind::Explicit { counit, .. } => counit.clone(),
            };
            // ε(g⁻¹) = ε(g)⁻¹ = 1 since inverse letters are group-like.
            if v.is_zero() {
                return Scalar::zero();
            }
            acc *= v;
        }
        acc
    }

    pub fn counit(&self, alg: &Algebra, a: &NCPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in a.terms() {
            acc += self.counit_word(alg, w) * c;
        }
        acc
    }

    /// ε_in(a) = ε(a)·e_X for a ∈ Hom(X,Y), summed over the terms of a.
    pub fn eps_in(&self, alg: &Algebra, a: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in a.terms() {
            out.add_term(Word::unit(w.source()), self.counit_word(alg, w) * c);
        }
        out
    }

    /// ε_out(a) = ε(a)·e_Y for a ∈ Hom(X,Y).
    pub fn eps_out(&self, alg: &Algebra, a: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in a.terms() {
            out.add_term(Word::unit(w.target(alg)), self.counit_word(alg, w) * c);
        }
        out
    }

    fn letter_antipode(&self, alg: &Algebra, l: Letter) -> NCPoly {
        match (&self.kinds[&l.gen], l.inv) {
            (CoproductKind::GroupLike, false) => NCPoly::gen_inv(alg, l.gen),
            (CoproductKind::GroupLike, true) => NCPoly::gen(alg, l.gen),
            (CoproductKind::Primitive, false) => NCPoly::gen(alg, l.gen).neg(),
            (CoproductKind::Explicit { antipode, .. }, false) => antipode.clone(),
            (_, true) => unreachable!("inverse letter of a non-group-like generator"),
        }
    }

    /// s(l₁⋯l_k) = (-1)^{Σ_{i<j}|l_i||l_j|} s(l_k)⋯s(l₁), the iterated
    /// antihomomorphism rule; s(e_X) = e_X.
    fn word_antipode(&self, alg: &Algebra, w: &Word) -> NCPoly {
        if w.is_unit() {
            return NCPoly::unit_at(w.source());
        }
        let letters = w.letters();
        let mut sign_exp = 0i64;
        for i in 0..letters.len() {
            for j in (i + 1)..letters.len() {
                sign_exp += alg.degree(letters[i].gen) * alg.degree(letters[j].gen);
            }
        }
        let mut acc: Option<NCPoly> = None;
        for &l in letters.iter().rev() {
            let sl = self.letter_antipode(alg, l);
            acc = Some(match acc {
                None => sl,
                Some(p) => p.mul(&sl, alg),
            });
        }
        acc.expect("nonempty word").scale(&sign_pow(sign_exp))
    }

    pub fn antipode(&self, alg: &Algebra, a: &NCPoly) -> Result<NCPoly, HopfError> {
        let mut out = NCPoly::zero();
        for (w, c) in a.terms() {
            out = out.add(&self.word_antipode(alg, w).scale(c));
        }
        Ok(out)
    }

    /// Apply s to every leg. s is degree-preserving, so no Koszul signs
    /// arise from moving it past the other legs.
    pub fn apply_s_legs(&self, alg: &Algebra, t: &TensorPoly) -> Result<TensorPoly, HopfError> {
        let mut out = TensorPoly::zero(t.arity());
        for (legs, c) in t.terms() {
            let mut pieces: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
            for leg in legs {
                let sp = self.word_antipode(alg, leg);
                let mut next = Vec::new();
                for (prefix, pc) in &pieces {
                    for (w, wc) in sp.terms() {
                        let mut p2 = prefix.clone();
                        p2.push(w.clone());
                        next.push((p2, pc.clone() * wc));
                    }
                }
                pieces = next;
            }
            for (legs2, c2) in pieces {
                out.add_term(legs2, c2);
            }
        }
        Ok(out)
    }

    /// Replace leg k by its coproduct legs (arity n becomes n+1). Δ has
    /// degree 0, so this is sign-free.
    pub fn coproduct_leg(
        &self,
        alg: &Algebra,
        t: &TensorPoly,
        k: usize,
    ) -> Result<TensorPoly, HopfError> {
        let mut out = TensorPoly::zero(t.arity() + 1);
        for (legs, c) in t.terms() {
            let dw = self.word_coproduct(alg, &legs[k]);
            for (split, c2) in dw.terms() {
                let mut legs2 = Vec::with_capacity(legs.len() + 1);
                legs2.extend_from_slice(&legs[..k]);
                legs2.push(split[0].clone());
                legs2.push(split[1].clone());
                legs2.extend_from_slice(&legs[k + 1..]);
                out.add_term(legs2, c.clone() * c2);
            }
        }
        Ok(out)
    }

    /// Contract leg k of an arity-2 tensor with ε, leaving an element.
    /// ε has degree 0, so no signs either way.
    pub fn counit_contract(&self, alg: &Algebra, t: &TensorPoly, k: usize) -> NCPoly {
        assert_eq!(t.arity(), 2, "counit contraction is for arity 2");
        let mut out = NCPoly::zero();
        for (legs, c) in t.terms() {
            let e = self.counit_word(alg, &legs[k]);
            if !e.is_zero() {
                out.add_term(legs[1 - k].clone(), c.clone() * e);
            }
        }
        out
    }

    /// m(id⊗s)Δ for a precomputed coproduct.
    fn convolve_id_s(&self, alg: &Algebra, cop: &TensorPoly) -> Result<NCPoly, HopfError> {
        let mut out = NCPoly::zero();
        for (legs, c) in cop.terms() {
            let left = NCPoly::from_term(legs[0].clone(), c.clone());
            out = out.add(&left.mul(&self.word_antipode(alg, &legs[1]), alg));
        }
        Ok(out)
    }

    /// m(s⊗id)Δ for a precomputed coproduct.
    fn convolve_s_id(&self, alg: &Algebra, cop: &TensorPoly) -> Result<NCPoly, HopfError> {
        let mut out = NCPoly::zero();
        for (legs, c) in cop.terms() {
            let right = NCPoly::from_term(legs[1].clone(), c.clone());
            out = out.add(&self.word_antipode(alg, &legs[0]).mul(&right, alg));
        }
        Ok(out)
    }
}

/// Product on A⊗A with the Koszul twist: (a₁⊗a₂)(b₁⊗b₂) =
/// (-1)^{|a₂||b₁|} a₁b₁ ⊗ a₂b₂. Non-composable products vanish.
pub fn twisted_mul(alg: &Algebra, s: &TensorPoly, t: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero(2);
    for (a, ca) in s.terms() {
        for (b, cb) in t.terms() {
            let l0 = a[0].mul(&b[0], alg);
            let l1 = a[1].mul(&b[1], alg);
            if let (Some(l0), Some(l1)) = (l0, l1) {
                let sgn = sign_pow(a[1].degree(alg) * b[0].degree(alg));
                out.add_term(vec![l0, l1], ca.clone() * cb * sgn);
            }
        }
    }
    out
}

fn word_pool(alg: &Algebra, maxlen: usize) -> Vec<Word> {
    let mut pool: Vec<Word> = alg.objects().map(Word::unit).collect();
    pool.extend(alg.words_up_to(maxlen));
    pool
}

fn ncp(w: &Word) -> NCPoly {
    NCPoly::from_term(w.clone(), Scalar::one())
}

fn poly_witness(alg: &Algebra, inputs: Vec<String>, lhs: &NCPoly, rhs: &NCPoly) -> Witness {
    Witness {
        inputs,
        lhs: lhs.display(alg),
        rhs: rhs.display(alg),
    }
}

fn tensor_witness(alg: &Algebra, inputs: Vec<String>, lhs: &TensorPoly, rhs: &TensorPoly) -> Witness {
    Witness {
        inputs,
        lhs: lhs.display(alg),
        rhs: rhs.display(alg),
    }
}

/// Sweep the Hopf axioms over all words of length ≤ maxlen plus the unit
/// words. Cocommutativity, involutivity and the two one-sided antipode
/// characterizations are checked when the generator coproducts are
/// cocommutative.
pub fn check_hopf(alg: &Algebra, h: &HopfDecl, maxlen: usize) -> Result<AxiomReport, HopfError> {
    let pool = word_pool(alg, maxlen);
    let mut checks = Vec::new();

    {
        let mut fail = None;
        for w in &pool {
            let cop = h.word_coproduct(alg, w);
            let l = h.coproduct_leg(alg, &cop, 0)?;
            let r = h.coproduct_leg(alg, &cop, 1)?;
            if l != r {
                fail = Some(tensor_witness(
                    alg,
                    vec![w.display(alg)],
                    &l,
                    &r,
                ));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "coassociativity",
                pool.len(),
                format!("(Δ⊗id)Δ = (id⊗Δ)Δ on words of length <= {maxlen}"),
            ),
            Some(w) => CheckResult::failed("coassociativity", pool.len(), "mismatch", w),
        });
    }

    {
        let mut fail = None;
        for w in &pool {
            let cop = h.word_coproduct(alg, w);
            let wp = ncp(w);
            let l = h.counit_contract(alg, &cop, 1);
            let r = h.counit_contract(alg, &cop, 0);
            if l != wp || r != wp {
                fail = Some(poly_witness(alg, vec![w.display(alg)], &l, &wp));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "counit-axiom",
                pool.len(),
                "(id⊗ε)Δ = id = (ε⊗id)Δ",
            ),
            Some(w) => CheckResult::failed("counit-axiom", pool.len(), "mismatch", w),
        });
    }

    // Cocommutativity of the generator coproducts propagates to all words
    // because the flip is an automorphism of the twisted product.
    let cocommutative = alg.gens().all(|g| {
        let cop = h.word_coproduct(alg, &Word::gen(alg, g));
        cop == cop.graded_permute(alg, &[1, 0], 0)
    });
    if cocommutative {
        let mut fail = None;
        for w in &pool {
            let cop = h.word_coproduct(alg, w);
            let flip = cop.graded_permute(alg, &[1, 0], 0);
            if cop != flip {
                fail = Some(tensor_witness(alg, vec![w.display(alg)], &cop, &flip));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed("cocommutativity", pool.len(), "Δ = P₂₁Δ"),
            Some(w) => CheckResult::failed("cocommutativity", pool.len(), "mismatch", w),
        });
    }

    {
        let mut fail = None;
        for w in &pool {
            let cop = h.word_coproduct(alg, w);
            let wp = ncp(w);
            let r = h.convolve_id_s(alg, &cop)?;
            let l = h.convolve_s_id(alg, &cop)?;
            let ein = h.eps_in(alg, &wp);
            let eout = h.eps_out(alg, &wp);
            if r != ein {
                fail = Some(poly_witness(alg, vec![w.display(alg)], &r, &ein));
                break;
            }
            if l != eout {
                fail = Some(poly_witness(alg, vec![w.display(alg)], &l, &eout));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "antipode-convolution",
                pool.len(),
                "a⁽¹⁾s(a⁽²⁾) = ε_in(a) and s(a⁽¹⁾)a⁽²⁾ = ε_out(a)",
            ),
            Some(w) => CheckResult::failed("antipode-convolution", pool.len(), "mismatch", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for u in &pool {
            for v in &pool {
                let Some(uv) = u.mul(v, alg) else { continue };
                cases += 1;
                let l = h.word_antipode(alg, &uv);
                let r = h
                    .word_antipode(alg, v)
                    .mul(&h.word_antipode(alg, u), alg)
                    .scale(&sign_pow(u.degree(alg) * v.degree(alg)));
                if l != r {
                    fail = Some(poly_witness(
                        alg,
                        vec![u.display(alg), v.display(alg)],
                        &l,
                        &r,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "antipode-antihomomorphism",
                cases,
                "s(ab) = (-1)^{|a||b|} s(b)s(a)",
            ),
            Some(w) => CheckResult::failed("antipode-antihomomorphism", cases, "mismatch", w),
        });
    }

    {
        let mut fail = None;
        for w in &pool {
            let sw = h.word_antipode(alg, w);
            let l = h.counit(alg, &sw);
            let r = h.counit_word(alg, w);
            if l != r {
                fail = Some(Witness {
                    inputs: vec![w.display(alg)],
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                });
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed("antipode-counit", pool.len(), "ε∘s = ε"),
            Some(w) => CheckResult::failed("antipode-counit", pool.len(), "mismatch", w),
        });
    }

    {
        let mut fail = None;
        for w in &pool {
            let sw = h.word_antipode(alg, w);
            let l = h.coproduct(alg, &sw)?;
            let r = h
                .apply_s_legs(alg, &h.word_coproduct(alg, w))?
                .graded_permute(alg, &[1, 0], 0);
            if l != r {
                fail = Some(tensor_witness(alg, vec![w.display(alg)], &l, &r));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "antipode-coalgebra",
                pool.len(),
                "Δ∘s = (s⊗s)P₂₁Δ",
            ),
            Some(w) => CheckResult::failed("antipode-coalgebra", pool.len(), "mismatch", w),
        });
    }

    if cocommutative {
        let mut fail = None;
        for w in &pool {
            let ss = h.antipode(alg, &h.word_antipode(alg, w))?;
            let wp = ncp(w);
            if ss != wp {
                fail = Some(poly_witness(alg, vec![w.display(alg)], &ss, &wp));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed("antipode-involutive", pool.len(), "s² = id"),
            Some(w) => CheckResult::failed("antipode-involutive", pool.len(), "mismatch", w),
        });

        // The flipped convolutions of an involutive antipode:
        // (i)  Σ (-1)^{|a⁽¹⁾||a⁽²⁾|} s(a⁽²⁾)a⁽¹⁾ = ε_out(a)
        // (ii) Σ (-1)^{|a⁽¹⁾||a⁽²⁾|} a⁽²⁾s(a⁽¹⁾) = ε_in(a)
        let mut fail = None;
        for w in &pool {
            let cop = h.word_coproduct(alg, w);
            let wp = ncp(w);
            let mut one = NCPoly::zero();
            let mut two = NCPoly::zero();
            for (legs, c) in cop.terms() {
                let sgn = sign_pow(legs[0].degree(alg) * legs[1].degree(alg));
                let k = c.clone() * sgn;
                one = one.add(
                    &h.word_antipode(alg, &legs[1])
                        .mul(&ncp(&legs[0]), alg)
                        .scale(&k),
                );
                two = two.add(
                    &ncp(&legs[1])
                        .mul(&h.word_antipode(alg, &legs[0]), alg)
                        .scale(&k),
                );
            }
            let eout = h.eps_out(alg, &wp);
            let ein = h.eps_in(alg, &wp);
            if one != eout {
                fail = Some(poly_witness(alg, vec![w.display(alg)], &one, &eout));
                break;
            }
            if two != ein {
                fail = Some(poly_witness(alg, vec![w.display(alg)], &two, &ein));
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "antipode-characterizations",
                pool.len(),
                "both flipped convolutions recover ε_in / ε_out",
            ),
            Some(w) => {
                CheckResult::failed("antipode-characterizations", pool.len(), "mismatch", w)
            }
        });
    }

    {
        let mut fail = None;
        let objs: Vec<ObjId> = alg.objects().collect();
        for &x in &objs {
            let e = Word::unit(x);
            let cop = h.word_coproduct(alg, &e);
            let want = TensorPoly::from_term(vec![e.clone(), e.clone()], Scalar::one());
            if cop != want {
                fail = Some(tensor_witness(alg, vec![e.display(alg)], &cop, &want));
                break;
            }
            if h.word_antipode(alg, &e) != ncp(&e) || !h.counit_word(alg, &e).is_one() {
                fail = Some(Witness {
                    inputs: vec![e.display(alg)],
                    lhs: h.word_antipode(alg, &e).display(alg),
                    rhs: e.display(alg),
                });
                break;
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "unit-comultiplication",
                objs.len(),
                "Δ(e_X) = e_X⊗e_X, s(e_X) = e_X, ε(e_X) = 1",
            ),
            Some(w) => CheckResult::failed("unit-comultiplication", objs.len(), "mismatch", w),
        });
    }

    Ok(checks)
}

fn lambda_words(
    ev: &Evaluator,
    h: &HopfDecl,
    wa: &Word,
    wb: &Word,
) -> Result<TensorPoly, HopfError> {
    let alg = ev.alg;
    let da = h.word_coproduct(alg, wa);
    let db = h.word_coproduct(alg, wb);
    let mut out = TensorPoly::zero(2);
    for (la, ca) in da.terms() {
        for (lb, cb) in db.terms() {
            let v = ev.eval_words(&la[1], &lb[0])?;
            if v.is_zero() {
                continue;
            }
            let s_b2 = h.word_antipode(alg, &lb[1]);
            for (z, cz) in v.terms() {
                let leg0 = ncp(&la[0]).mul(&h.word_antipode(alg, &z[0]), alg);
                let leg1 = ncp(&z[1]).mul(&s_b2, alg);
                let t = TensorPoly::tensor2(&leg0, &leg1);
                out = out.add(&t.scale(&(ca.clone() * cb * cz)));
            }
        }
    }
    Ok(out)
}

/// Λ(a,b) = Σ a⁽¹⁾ s(⟨⟨a⁽²⁾,b⁽¹⁾⟩⟩′) ⊗ ⟨⟨a⁽²⁾,b⁽¹⁾⟩⟩″ s(b⁽²⁾), extended
/// bilinearly. For a ∈ Hom(X,Y), b ∈ Hom(U,V) the value lies in
/// Hom(X,U)⊗Hom(X,U).
pub fn lambda_pairing(
    ev: &Evaluator,
    h: &HopfDecl,
    a: &NCPoly,
    b: &NCPoly,
) -> Result<TensorPoly, HopfError> {
    let mut out = TensorPoly::zero(2);
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let t = lambda_words(ev, h, wa, wb)?;
            out = out.add(&t.scale(&(ca.clone() * cb)));
        }
    }
    Ok(out)
}

/// λ(a,b) = (ε⊗id)Λ(a,b).
pub fn lambda_reduced(
    ev: &Evaluator,
    h: &HopfDecl,
    a: &NCPoly,
    b: &NCPoly,
) -> Result<NCPoly, HopfError> {
    let t = lambda_pairing(ev, h, a, b)?;
    Ok(h.counit_contract(ev.alg, &t, 0))
}

/// The closed form λ(a,b) = Σ ε(⟨⟨a,b⁽¹⁾⟩⟩′) ⟨⟨a,b⁽¹⁾⟩⟩″ s(b⁽²⁾), used as a
/// cross-check against (ε⊗id)Λ.
pub fn lambda_reduced_explicit(
    ev: &Evaluator,
    h: &HopfDecl,
    a: &NCPoly,
    b: &NCPoly,
) -> Result<NCPoly, HopfError> {
    let alg = ev.alg;
    let mut out = NCPoly::zero();
    for (wb, cb) in b.terms() {
        let db = h.word_coproduct(alg, wb);
        for (lb, c1) in db.terms() {
            let v = ev.bb_eval(a, &ncp(&lb[0]))?;
            if v.is_zero() {
                continue;
            }
            let s_b2 = h.word_antipode(alg, &lb[1]);
            for (z, cz) in v.terms() {
                let e = h.counit_word(alg, &z[0]);
                if e.is_zero() {
                    continue;
                }
                let p = ncp(&z[1]).mul(&s_b2, alg);
                out = out.add(&p.scale(&(cb.clone() * c1 * cz * e)));
            }
        }
    }
    Ok(out)
}

/// The scalar form a•b = (ε⊗ε)⟨⟨a,b⟩⟩. Requires a counit, hence a Hopf
/// declaration.
pub fn scalar_form(
    ev: &Evaluator,
    h: Option<&HopfDecl>,
    a: &NCPoly,
    b: &NCPoly,
) -> Result<Scalar, HopfError> {
    let h = h.ok_or(HopfError::CounitUndefined)?;
    let v = ev.bb_eval(a, b)?;
    let mut acc = Scalar::zero();
    for (legs, c) in v.terms() {
        let e = h.counit_word(ev.alg, &legs[0]) * h.counit_word(ev.alg, &legs[1]);
        acc += e * c;
    }
    Ok(acc)
}

/// Leibniz rules and d-antisymmetry of the scalar form:
///   a•(bc) = (a•b)ε(c) + ε(b)(a•c)
///   (ab)•c = ε(a)(b•c) + (a•c)ε(b)
///   a•b = -(-1)^{|a|_d |b|_d} b•a
pub fn check_scalar_form(
    alg: &Algebra,
    spec: &BibracketSpec,
    h: Option<&HopfDecl>,
    maxlen: usize,
) -> Result<AxiomReport, HopfError> {
    let h = h.ok_or(HopfError::CounitUndefined)?;
    let ev = Evaluator::new(alg, spec);
    let d = ev.d();
    let pool = word_pool(alg, maxlen);
    let mut checks = Vec::new();

    let dot = |a: &NCPoly, b: &NCPoly| scalar_form(&ev, Some(h), a, b);

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                for c in &pool {
                    let Some(bc) = b.mul(c, alg) else { continue };
                    cases += 1;
                    let ap = ncp(a);
                    let lhs = dot(&ap, &ncp(&bc))?;
                    let rhs = dot(&ap, &ncp(b))? * h.counit_word(alg, c)
                        + h.counit_word(alg, b) * dot(&ap, &ncp(c))?;
                    if lhs != rhs {
                        fail = Some(Witness {
                            inputs: vec![a.display(alg), b.display(alg), c.display(alg)],
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed("scalar-leibniz-outer", cases, "a•(bc) = (a•b)ε(c) + ε(b)(a•c)"),
            Some(w) => CheckResult::failed("scalar-leibniz-outer", cases, "mismatch", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                let Some(ab) = a.mul(b, alg) else { continue };
                for c in &pool {
                    cases += 1;
                    let cp = ncp(c);
                    let lhs = dot(&ncp(&ab), &cp)?;
                    let rhs = h.counit_word(alg, a) * dot(&ncp(b), &cp)?
                        + dot(&ncp(a), &cp)? * h.counit_word(alg, b);
                    if lhs != rhs {
                        fail = Some(Witness {
                            inputs: vec![a.display(alg), b.display(alg), c.display(alg)],
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed("scalar-leibniz-inner", cases, "(ab)•c = ε(a)(b•c) + (a•c)ε(b)"),
            Some(w) => CheckResult::failed("scalar-leibniz-inner", cases, "mismatch", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let lhs = dot(&ncp(a), &ncp(b))?;
                let rhs = -sign_pow((a.degree(alg) + d) * (b.degree(alg) + d))
                    * dot(&ncp(b), &ncp(a))?;
                if lhs != rhs {
                    fail = Some(Witness {
                        inputs: vec![a.display(alg), b.display(alg)],
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "scalar-antisymmetry",
                cases,
                "a•b = -(-1)^{|a|_d|b|_d} b•a",
            ),
            Some(w) => CheckResult::failed("scalar-antisymmetry", cases, "mismatch", w),
        });
    }

    Ok(checks)
}

/// Reducibility and its consequences. The gate is Δ(λ(a,b)) = Λ(a,b) for
/// all word pairs; when it fails the report stops there with a witness.
/// On success the sweep continues with the identities that reducibility
/// (plus cocommutativity and d-antisymmetry) buys:
///   (i)   ⟨⟨s(a),s(b)⟩⟩ = (s⊗s)P₂₁⟨⟨a,b⟩⟩
///   (ii)  (s⊗s)Λ(a,b) = -(-1)^{|a|_d|b|_d} P₂₁ Λ(b,a)
///   (iii) s(λ(a,b)) = -(-1)^{|a|_d|b|_d} λ(b,a)
/// together with both Λ-Leibniz rules, the reconstruction of ⟨⟨-,-⟩⟩ from
/// Λ, and ε∘λ = •.
pub fn check_reducible(
    alg: &Algebra,
    spec: &BibracketSpec,
    h: &HopfDecl,
    maxlen: usize,
) -> Result<AxiomReport, HopfError> {
    let ev = Evaluator::new(alg, spec);
    let d = ev.d();
    let pool = word_pool(alg, maxlen);
    let mut checks = Vec::new();

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let lam = lambda_words(&ev, h, a, b)?;
                let small = h.counit_contract(alg, &lam, 0);
                let split = h.coproduct(alg, &small)?;
                if split != lam {
                    fail = Some(tensor_witness(
                        alg,
                        vec![a.display(alg), b.display(alg)],
                        &split,
                        &lam,
                    ));
                    break 'outer;
                }
            }
        }
        match fail {
            None => checks.push(CheckResult::passed(
                "lambda-splits",
                cases,
                "Δ(λ(a,b)) = Λ(a,b), so Λ(A⊗A) ⊂ Δ(A)",
            )),
            Some(w) => {
                checks.push(CheckResult::failed(
                    "lambda-splits",
                    cases,
                    "Λ does not factor through Δ",
                    w,
                ));
                return Ok(checks);
            }
        }
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let lam = lambda_words(&ev, h, a, b)?;
                let left = h.counit_contract(alg, &lam, 0);
                let right = h.counit_contract(alg, &lam, 1);
                let explicit = lambda_reduced_explicit(&ev, h, &ncp(a), &ncp(b))?;
                if left != right || left != explicit {
                    fail = Some(poly_witness(
                        alg,
                        vec![a.display(alg), b.display(alg)],
                        &left,
                        &explicit,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "lambda-forms-agree",
                cases,
                "(ε⊗id)Λ = (id⊗ε)Λ = closed form",
            ),
            Some(w) => CheckResult::failed("lambda-forms-agree", cases, "mismatch", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let sa = h.word_antipode(alg, a);
                let sb = h.word_antipode(alg, b);
                let lhs = ev.bb_eval(&sa, &sb)?;
                let rhs =
                    h.apply_s_legs(alg, &ev.eval_words(a, b)?.graded_permute(alg, &[1, 0], 0))?;
                if lhs != rhs {
                    fail = Some(tensor_witness(
                        alg,
                        vec![a.display(alg), b.display(alg)],
                        &lhs,
                        &rhs,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "antipode-bracket-compatibility",
                cases,
                "⟨⟨s(a),s(b)⟩⟩ = (s⊗s)P₂₁⟨⟨a,b⟩⟩",
            ),
            Some(w) => {
                CheckResult::failed("antipode-bracket-compatibility", cases, "mismatch", w)
            }
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let shift = sign_pow((a.degree(alg) + d) * (b.degree(alg) + d));
                let lhs = h.apply_s_legs(alg, &lambda_words(&ev, h, a, b)?)?;
                let rhs = lambda_words(&ev, h, b, a)?
                    .graded_permute(alg, &[1, 0], 0)
                    .scale(&-shift.clone());
                if lhs != rhs {
                    fail = Some(tensor_witness(
                        alg,
                        vec![a.display(alg), b.display(alg)],
                        &lhs,
                        &rhs,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "Lambda-antisymmetry",
                cases,
                "(s⊗s)Λ(a,b) = -(-1)^{|a|_d|b|_d} P₂₁Λ(b,a)",
            ),
            Some(w) => CheckResult::failed("Lambda-antisymmetry", cases, "mismatch", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let shift = sign_pow((a.degree(alg) + d) * (b.degree(alg) + d));
                let lhs = h.antipode(alg, &lambda_reduced(&ev, h, &ncp(a), &ncp(b))?)?;
                let rhs = lambda_reduced(&ev, h, &ncp(b), &ncp(a))?.scale(&-shift.clone());
                if lhs != rhs {
                    fail = Some(poly_witness(
                        alg,
                        vec![a.display(alg), b.display(alg)],
                        &lhs,
                        &rhs,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "lambda-antisymmetry",
                cases,
                "s(λ(a,b)) = -(-1)^{|a|_d|b|_d} λ(b,a)",
            ),
            Some(w) => CheckResult::failed("lambda-antisymmetry", cases, "mismatch", w),
        });
    }

    // Λ-Leibniz, sampled deterministically: every stride-th triple of the
    // pool cube, so the sweep stays bounded at larger maxlen.
    {
        let total = pool.len() * pool.len() * pool.len();
        let stride = (total / 60).max(1);
        let mut fail = None;
        let mut cases = 0usize;
        let mut idx = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                for c in &pool {
                    idx += 1;
                    if idx % stride != 0 {
                        continue;
                    }
                    let Some(bc) = b.mul(c, alg) else { continue };
                    cases += 1;
                    let lhs = lambda_words(&ev, h, a, &bc)?;
                    let db = h.word_coproduct(alg, b);
                    let mut rhs = TensorPoly::zero(2);
                    for (lb, cb) in db.terms() {
                        let e = match lb[1].mul(c, alg) {
                            Some(w) => h.counit_word(alg, &w),
                            None => Scalar::zero(),
                        };
                        if !e.is_zero() {
                            rhs = rhs.add(&lambda_words(&ev, h, a, &lb[0])?.scale(&(cb.clone() * e)));
                        }
                    }
                    let sb = h.apply_s_legs(alg, &db)?;
                    let t2 = twisted_mul(alg, &lambda_words(&ev, h, a, c)?, &sb)
                        .scale(&sign_pow(b.degree(alg) * c.degree(alg)));
                    rhs = rhs.add(&t2);
                    if lhs != rhs {
                        fail = Some(tensor_witness(
                            alg,
                            vec![a.display(alg), b.display(alg), c.display(alg)],
                            &lhs,
                            &rhs,
                        ));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "Lambda-leibniz-outer",
                cases,
                "Λ(a,bc) = Λ(a,b⁽¹⁾)ε(b⁽²⁾c) + (-1)^{|b||c|}Λ(a,c)·(s⊗s)Δb",
            ),
            Some(w) => CheckResult::failed("Lambda-leibniz-outer", cases, "mismatch", w),
        });

        let mut fail = None;
        let mut cases = 0usize;
        let mut idx = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                for c in &pool {
                    idx += 1;
                    if idx % stride != 0 {
                        continue;
                    }
                    let Some(ab) = a.mul(b, alg) else { continue };
                    cases += 1;
                    let lhs = lambda_words(&ev, h, &ab, c)?;
                    let da = h.word_coproduct(alg, a);
                    let mut rhs = TensorPoly::zero(2);
                    for (la, ca) in da.terms() {
                        let e = match la[1].mul(b, alg) {
                            Some(w) => h.counit_word(alg, &w),
                            None => Scalar::zero(),
                        };
                        if !e.is_zero() {
                            rhs = rhs.add(&lambda_words(&ev, h, &la[0], c)?.scale(&(ca.clone() * e)));
                        }
                    }
                    rhs = rhs.add(&twisted_mul(alg, &da, &lambda_words(&ev, h, b, c)?));
                    if lhs != rhs {
                        fail = Some(tensor_witness(
                            alg,
                            vec![a.display(alg), b.display(alg), c.display(alg)],
                            &lhs,
                            &rhs,
                        ));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "Lambda-leibniz-inner",
                cases,
                "Λ(ab,c) = Λ(a⁽¹⁾,c)ε(a⁽²⁾b) + Δ(a)·Λ(b,c)",
            ),
            Some(w) => CheckResult::failed("Lambda-leibniz-inner", cases, "mismatch", w),
        });
    }

    {
        let gens: Vec<GenId> = alg.gens().collect();
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for &ga in &gens {
            for &gb in &gens {
                cases += 1;
                let wa = Word::gen(alg, ga);
                let wb = Word::gen(alg, gb);
                let da = h.word_coproduct(alg, &wa);
                let db = h.word_coproduct(alg, &wb);
                let mut lhs = TensorPoly::zero(2);
                for (la, ca) in da.terms() {
                    for (lb, cb) in db.terms() {
                        let t = lambda_words(&ev, h, &la[1], &lb[0])?
                            .mul_leg_left(0, &h.word_antipode(alg, &la[0]), alg)
                            .mul_leg_right(1, &ncp(&lb[1]), alg);
                        lhs = lhs.add(&t.scale(&(ca.clone() * cb)));
                    }
                }
                let v = ev.eval_words(&wa, &wb)?;
                let mut rhs = TensorPoly::zero(2);
                for (z, cz) in v.terms() {
                    let s0 = h.word_antipode(alg, &z[0]);
                    rhs = rhs.add(&TensorPoly::tensor2(&s0, &ncp(&z[1])).scale(cz));
                }
                if lhs != rhs {
                    fail = Some(tensor_witness(
                        alg,
                        vec![wa.display(alg), wb.display(alg)],
                        &lhs,
                        &rhs,
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "bracket-reconstruction",
                cases,
                "s(a⁽¹⁾)Λ(a⁽²⁾,b⁽¹⁾)b⁽²⁾ = (s⊗id)⟨⟨a,b⟩⟩",
            ),
            Some(w) => CheckResult::failed("bracket-reconstruction", cases, "mismatch", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for a in &pool {
            for b in &pool {
                cases += 1;
                let lam = lambda_reduced(&ev, h, &ncp(a), &ncp(b))?;
                let lhs = h.counit(alg, &lam);
                let rhs = scalar_form(&ev, Some(h), &ncp(a), &ncp(b))?;
                if lhs != rhs {
                    fail = Some(Witness {
                        inputs: vec![a.display(alg), b.display(alg)],
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed("scalar-form-recovered", cases, "ε∘λ = •"),
            Some(w) => CheckResult::failed("scalar-form-recovered", cases, "mismatch", w),
        });
    }

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::single_object;
    use crate::expr::parse_tensor2;
    use crate::report::all_pass;
    use crate::scalar::int;

    fn laurent_fixture(n: i64) -> (Algebra, BibracketSpec, HopfDecl) {
        let (alg, _) = single_object(&[("x", 0, true), ("y", n - 2, false)]);
        let spec = BibracketSpec::from_exprs(
            &alg,
            2 - n,
            &[
                ("x", "x", "0"),
                ("x", "y", "(-1) * x (x) 1"),
                ("y", "x", "1 (x) x"),
                ("y", "y", "1 (x) y + (-1) * y (x) 1"),
            ],
        )
        .unwrap();
        let h = HopfDecl::from_kinds(
            &alg,
            &[("x", CoproductKind::GroupLike), ("y", CoproductKind::Primitive)],
        )
        .unwrap();
        (alg, spec, h)
    }

    fn sphere_fixture(p: i64, q: i64) -> (Algebra, BibracketSpec, HopfDecl) {
        let (alg, _) = single_object(&[("x", p - 1, false), ("y", q - 1, false)]);
        let sxy = if (q * (p + 1) + 1).rem_euclid(2) == 0 { "" } else { "(-1) * " };
        let syx = if (p + 1).rem_euclid(2) == 0 { "" } else { "(-1) * " };
        let spec = BibracketSpec::from_exprs(
            &alg,
            2 - (p + q),
            &[
                ("x", "x", "0"),
                ("x", "y", &format!("{sxy}1 (x) 1")),
                ("y", "x", &format!("{syx}1 (x) 1")),
                ("y", "y", "0"),
            ],
        )
        .unwrap();
        let h = HopfDecl::from_kinds(
            &alg,
            &[("x", CoproductKind::Primitive), ("y", CoproductKind::Primitive)],
        )
        .unwrap();
        (alg, spec, h)
    }

    #[test]
    fn coproduct_values() {
        let (alg, _, h) = laurent_fixture(3);
        let x = NCPoly::gen(&alg, alg.lookup("x").unwrap());
        let y = NCPoly::gen(&alg, alg.lookup("y").unwrap());

        let dx = h.coproduct(&alg, &x).unwrap();
        assert_eq!(dx, parse_tensor2(&alg, "x (x) x").unwrap());

        let dy = h.coproduct(&alg, &y).unwrap();
        assert_eq!(dy, parse_tensor2(&alg, "y (x) 1 + 1 (x) y").unwrap());

        // |y| = 1 here, so the cross terms of Δ(y²) cancel.
        let yy = y.mul(&y, &alg);
        let dyy = h.coproduct(&alg, &yy).unwrap();
        assert_eq!(dyy, parse_tensor2(&alg, "y*y (x) 1 + 1 (x) y*y").unwrap());

        // Even |y| keeps all four terms.
        let (alg4, _, h4) = laurent_fixture(4);
        let y4 = NCPoly::gen(&alg4, alg4.lookup("y").unwrap());
        let dyy4 = h4.coproduct(&alg4, &y4.mul(&y4, &alg4)).unwrap();
        assert_eq!(
            dyy4,
            parse_tensor2(&alg4, "y*y (x) 1 + (2) * y (x) y + 1 (x) y*y").unwrap()
        );

        let xy = x.mul(&y, &alg);
        let dxy = h.coproduct(&alg, &xy).unwrap();
        assert_eq!(dxy, parse_tensor2(&alg, "x*y (x) x + x (x) x*y").unwrap());
    }

    #[test]
    fn antipode_values() {
        let (alg, _, h) = laurent_fixture(3);
        let gx = alg.lookup("x").unwrap();
        let gy = alg.lookup("y").unwrap();
        let x = NCPoly::gen(&alg, gx);
        let y = NCPoly::gen(&alg, gy);

        assert_eq!(h.antipode(&alg, &x).unwrap(), NCPoly::gen_inv(&alg, gx));
        assert_eq!(h.antipode(&alg, &y).unwrap(), y.neg());

        // s(xy) = (-1)^{0·1} s(y)s(x) = -y·x⁻¹
        let xy = x.mul(&y, &alg);
        let want = y.neg().mul(&NCPoly::gen_inv(&alg, gx), &alg);
        assert_eq!(h.antipode(&alg, &xy).unwrap(), want);

        // words with cancellation: s(x·x⁻¹) = s(e) = e
        let e = NCPoly::one(&alg);
        assert_eq!(
            h.antipode(&alg, &x.mul(&NCPoly::gen_inv(&alg, gx), &alg)).unwrap(),
            e
        );

        // involutivity on a longer word
        let w = xy.mul(&y, &alg);
        let ss = h.antipode(&alg, &h.antipode(&alg, &w).unwrap()).unwrap();
        assert_eq!(ss, w);
    }

    #[test]
    fn hopf_axioms_on_fixtures() {
        for (alg, _, h) in [laurent_fixture(3), laurent_fixture(4), sphere_fixture(2, 3)] {
            let report = check_hopf(&alg, &h, 3).unwrap();
            assert!(all_pass(&report), "{report:?}");
            assert!(report.iter().any(|c| c.name == "cocommutativity"));
            assert!(report.iter().any(|c| c.name == "antipode-involutive"));
        }
    }

    #[test]
    fn declaration_validation() {
        let (alg, _) = single_object(&[("x", 0, true), ("y", 1, false)]);
        let err = HopfDecl::from_kinds(
            &alg,
            &[("x", CoproductKind::Primitive), ("y", CoproductKind::Primitive)],
        )
        .unwrap_err();
        assert!(matches!(err, HopfError::InvertibleNotGroupLike { .. }));

        let err = HopfDecl::from_kinds(
            &alg,
            &[("x", CoproductKind::GroupLike), ("y", CoproductKind::GroupLike)],
        )
        .unwrap_err();
        assert!(matches!(err, HopfError::GroupLikeNotInvertible { .. }));

        let err = HopfDecl::from_kinds(&alg, &[("x", CoproductKind::GroupLike)]).unwrap_err();
        assert!(matches!(err, HopfError::MissingGenerator { .. }));

        // A bad explicit antipode trips the generator axiom check: with
        // Δ(y) primitive-shaped but s(y) = +y, the convolution gives 2y·...
        // instead of 0.
        let y = Word::gen(&alg, alg.lookup("y").unwrap());
        let e = Word::unit(alg.objects().next().unwrap());
        let mut cop = TensorPoly::from_term(vec![y.clone(), e.clone()], Scalar::one());
        cop.add_term(vec![e, y], Scalar::one());
        let err = HopfDecl::from_kinds(
            &alg,
            &[
                ("x", CoproductKind::GroupLike),
                (
                    "y",
                    CoproductKind::Explicit {
                        cop,
                        counit: Scalar::zero(),
                        antipode: NCPoly::gen(&alg, alg.lookup("y").unwrap()),
                    },
                ),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, HopfError::GeneratorAxiom { .. }));
    }

    #[test]
    fn explicit_kind_matches_primitive() {
        let (alg, _) = single_object(&[("x", 0, true), ("y", 2, false)]);
        let y = Word::gen(&alg, alg.lookup("y").unwrap());
        let e = Word::unit(alg.objects().next().unwrap());
        let mut cop = TensorPoly::from_term(vec![y.clone(), e.clone()], Scalar::one());
        cop.add_term(vec![e, y.clone()], Scalar::one());
        let h_explicit = HopfDecl::from_kinds(
            &alg,
            &[
                ("x", CoproductKind::GroupLike),
                (
                    "y",
                    CoproductKind::Explicit {
                        cop,
                        counit: Scalar::zero(),
                        antipode: NCPoly::from_term(y, int(-1)),
                    },
                ),
            ],
        )
        .unwrap();
        let h_primitive = HopfDecl::from_kinds(
            &alg,
            &[("x", CoproductKind::GroupLike), ("y", CoproductKind::Primitive)],
        )
        .unwrap();
        for w in word_pool(&alg, 3) {
            assert_eq!(
                h_explicit.word_coproduct(&alg, &w),
                h_primitive.word_coproduct(&alg, &w)
            );
            assert_eq!(
                h_explicit.word_antipode(&alg, &w),
                h_primitive.word_antipode(&alg, &w)
            );
        }
        assert!(all_pass(&check_hopf(&alg, &h_explicit, 3).unwrap()));
    }

    #[test]
    fn frozen_lambda_values() {
        let (alg, spec, h) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        let x = NCPoly::gen(&alg, alg.lookup("x").unwrap());
        let y = NCPoly::gen(&alg, alg.lookup("y").unwrap());

        assert_eq!(
            lambda_pairing(&ev, &h, &x, &y).unwrap(),
            parse_tensor2(&alg, "(-1) * 1 (x) 1").unwrap()
        );
        assert_eq!(
            lambda_pairing(&ev, &h, &y, &x).unwrap(),
            parse_tensor2(&alg, "1 (x) 1").unwrap()
        );
        assert_eq!(
            lambda_pairing(&ev, &h, &y, &y).unwrap(),
            parse_tensor2(&alg, "1 (x) y + y (x) 1").unwrap()
        );

        // sphere case: λ(x,y) = (-1)^{q(p+1)+1} = +1 for (p,q) = (2,3)
        let (alg2, spec2, h2) = sphere_fixture(2, 3);
        let ev2 = Evaluator::new(&alg2, &spec2);
        let x2 = NCPoly::gen(&alg2, alg2.lookup("x").unwrap());
        let y2 = NCPoly::gen(&alg2, alg2.lookup("y").unwrap());
        assert_eq!(
            lambda_reduced(&ev2, &h2, &x2, &y2).unwrap(),
            NCPoly::one(&alg2)
        );
        assert_eq!(
            lambda_reduced(&ev2, &h2, &y2, &x2).unwrap(),
            NCPoly::one(&alg2).neg()
        );

        // Λ(1,b) = 0
        let one = NCPoly::one(&alg);
        assert!(lambda_pairing(&ev, &h, &one, &y).unwrap().is_zero());
    }

    #[test]
    fn reducible_on_fixtures() {
        for (alg, spec, h) in [laurent_fixture(3), laurent_fixture(4), sphere_fixture(2, 3)] {
            let report = check_reducible(&alg, &spec, &h, 2).unwrap();
            assert!(all_pass(&report), "{report:?}");
            let names: Vec<_> = report.iter().map(|c| c.name.as_str()).collect();
            assert!(names.contains(&"lambda-splits"));
            assert!(names.contains(&"Lambda-antisymmetry"));
            assert!(names.contains(&"bracket-reconstruction"));
        }
    }

    #[test]
    fn irreducible_bracket_is_caught() {
        // x group-like, y primitive, both in degree 0, with the invented
        // table ⟨⟨x,y⟩⟩ = -x⊗x. Then Λ(x,y) = -1⊗x while λ(x,y) = -x, and
        // Δ(-x) = -x⊗x ≠ -1⊗x.
        let (alg, _) = single_object(&[("x", 0, true), ("y", 0, false)]);
        let spec = BibracketSpec::from_exprs(
            &alg,
            0,
            &[
                ("x", "x", "0"),
                ("x", "y", "(-1) * x (x) x"),
                ("y", "x", "0"),
                ("y", "y", "0"),
            ],
        )
        .unwrap();
        let h = HopfDecl::from_kinds(
            &alg,
            &[("x", CoproductKind::GroupLike), ("y", CoproductKind::Primitive)],
        )
        .unwrap();
        let report = check_reducible(&alg, &spec, &h, 1).unwrap();
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].name, "lambda-splits");
        assert!(!report[0].pass);
        let w = report[0].witness.as_ref().unwrap();
        assert_eq!(w.lhs, "(-1) * x (x) x");
        assert_eq!(w.rhs, "(-1) * e_pt (x) x");
    }

    #[test]
    fn scalar_form_values() {
        let (alg, spec, h) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        let x = NCPoly::gen(&alg, alg.lookup("x").unwrap());
        let y = NCPoly::gen(&alg, alg.lookup("y").unwrap());
        assert_eq!(scalar_form(&ev, Some(&h), &x, &y).unwrap(), int(-1));
        assert_eq!(scalar_form(&ev, Some(&h), &y, &x).unwrap(), int(1));
        assert_eq!(scalar_form(&ev, Some(&h), &x, &x).unwrap(), int(0));
        assert_eq!(scalar_form(&ev, Some(&h), &y, &y).unwrap(), int(0));
        assert_eq!(
            scalar_form(&ev, Some(&h), &x, &NCPoly::one(&alg)).unwrap(),
            int(0)
        );
        assert!(matches!(
            scalar_form(&ev, None, &x, &y),
            Err(HopfError::CounitUndefined)
        ));

        let (alg2, spec2, h2) = sphere_fixture(2, 3);
        let ev2 = Evaluator::new(&alg2, &spec2);
        let x2 = NCPoly::gen(&alg2, alg2.lookup("x").unwrap());
        let y2 = NCPoly::gen(&alg2, alg2.lookup("y").unwrap());
        assert_eq!(scalar_form(&ev2, Some(&h2), &x2, &y2).unwrap(), int(1));
    }

    #[test]
    fn scalar_form_leibniz() {
        for (alg, spec, h) in [laurent_fixture(3), sphere_fixture(2, 3)] {
            let report = check_scalar_form(&alg, &spec, Some(&h), 3).unwrap();
            assert!(all_pass(&report), "{report:?}");
        }
    }
}
