//! Representation algebras A_N and their induced structure.
//!
//! A_N is the graded-commutative polynomial ring on matrix-entry symbols
//! a_{ij} (1 ≤ i,j ≤ N, one per generator of A, with the generator's
//! degree), adjoined a unit e, subject to (1_A)_{ij} = δ_{ij}e. A degree-d
//! bibracket on A induces a degree-d bracket here by
//!
//!   {a_{ij}, b_{uv}} = ⟨⟨a,b⟩⟩′_{uj} ⟨⟨a,b⟩⟩″_{iv}
//!
//! extended to products by the two d-graded Leibniz rules. GL_N acts by
//! conjugating entry matrices and gl_N by the matching derivation; both
//! are equivariant for the bracket.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use thiserror::Error;

use crate::algebra::{Algebra, GenId, Word};
use crate::bracket::{gerstenhaber_on_generators, BibracketSpec, BracketError, Evaluator};
use crate::matrix::{random_invertible, MatrixError, QMatrix};
use crate::ncpoly::NCPoly;
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::scalar::{sign_pow, Scalar, Zero};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepalgError {
    #[error("symbolic mode cannot expand the inverse letter `{name}^-1`")]
    SymbolicInverseUnsupported { name: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// A matrix-entry symbol a_{ij} or (a⁻¹)_{ij}. The unit e is represented
/// by the empty monomial, never by a symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GCSymbol {
    pub name: String,
    pub inv: bool,
    pub i: usize,
    pub j: usize,
    pub degree: i64,
    pub gen: GenId,
}

impl GCSymbol {
    fn display(&self) -> String {
        if self.inv {
            format!("{}^-1_{}{}", self.name, self.i, self.j)
        } else {
            format!("{}_{}{}", self.name, self.i, self.j)
        }
    }
}

/// Sorts a monomial by the symbol order, accumulating the Koszul sign;
/// None when an odd-degree symbol gets squared.
fn normalize(mut mono: Vec<GCSymbol>) -> Option<(Vec<GCSymbol>, Scalar)> {
    let mut exp = 0i64;
    for k in 1..mono.len() {
        let mut pos = k;
        while pos > 0 && mono[pos] < mono[pos - 1] {
            exp += mono[pos].degree * mono[pos - 1].degree;
            mono.swap(pos, pos - 1);
            pos -= 1;
        }
    }
    for pair in mono.windows(2) {
        if pair[0] == pair[1] && pair[0].degree % 2 != 0 {
            return None;
        }
    }
    Some((mono, sign_pow(exp)))
}

/// Element of A_N^+: finite sum of sorted monomials in GCSymbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GCPoly {
    terms: BTreeMap<Vec<GCSymbol>, Scalar>,
}

impl GCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit e, i.e. the empty monomial.
    pub fn e() -> Self {
        let mut p = Self::zero();
        p.terms.insert(Vec::new(), crate::scalar::int(1));
        p
    }

    pub fn from_symbol(s: GCSymbol) -> Self {
        let mut p = Self::zero();
        p.terms.insert(vec![s], crate::scalar::int(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GCSymbol>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: Vec<GCSymbol>, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let Some((mono, sign)) = normalize(mono) else {
            return;
        };
        let entry = self.terms.entry(mono).or_insert_with(Scalar::zero);
        *entry += sign * coeff;
        if entry.is_zero() {
            let dead: Vec<Vec<GCSymbol>> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(m, _)| m.clone())
                .collect();
            for m in dead {
                self.terms.remove(&m);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        let mut out = Self::zero();
        if k.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                m.extend(m2.iter().cloned());
                out.add_term(m, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Total degree when homogeneous; None for 0 or mixed.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.iter().map(|s| s.degree).sum::<i64>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let mono = if m.is_empty() {
                "e".to_string()
            } else {
                m.iter().map(|s| s.display()).collect::<Vec<_>>().join("*")
            };
            let _ = write!(out, "({c}) * {mono}");
        }
        out
    }
}

/// How entries of invertible generators are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecializationMode {
    Symbolic,
    Numeric { seed: u64 },
}

/// A resolved specialization: in numeric mode, each invertible generator
/// carries a concrete invertible matrix and its exact inverse, drawn
/// deterministically from the seed.
pub struct Specialization {
    kind: SpzKind,
}

enum SpzKind {
    /// Inverse letters are rejected.
    Symbolic,
    /// Inverse letters become opaque (a⁻¹)_{ij} symbols. Sound for
    /// presentation-level identities; the relations a·a⁻¹ = 1 are not
    /// imposed on symbols.
    SymbolicFree,
    Numeric {
        matrices: BTreeMap<GenId, (QMatrix, QMatrix)>,
    },
}

impl Specialization {
    pub fn symbolic() -> Self {
        Specialization {
            kind: SpzKind::Symbolic,
        }
    }

    pub fn with_inverse_symbols() -> Self {
        Specialization {
            kind: SpzKind::SymbolicFree,
        }
    }

    pub fn numeric(alg: &Algebra, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut matrices = BTreeMap::new();
        for g in alg.gens() {
            if alg.decl(g).invertible {
                let m = random_invertible(n, &mut rng);
                let mi = m.inverse().expect("sampled matrix is invertible");
                matrices.insert(g, (m, mi));
            }
        }
        Specialization {
            kind: SpzKind::Numeric { matrices },
        }
    }

    pub fn resolve(mode: SpecializationMode, alg: &Algebra, n: usize) -> Self {
        match mode {
            SpecializationMode::Symbolic => Self::symbolic(),
            SpecializationMode::Numeric { seed } => Self::numeric(alg, n, seed),
        }
    }

    /// The (r,c) entry of one letter, as a polynomial.
    fn letter_entry(
        &self,
        alg: &Algebra,
        l: crate::algebra::Letter,
        r: usize,
        c: usize,
    ) -> Result<GCPoly, RepalgError> {
        let decl = alg.decl(l.gen);
        match &self.kind {
            SpzKind::Numeric { matrices } if decl.invertible => {
                let (m, mi) = matrices.get(&l.gen).expect("invertible generators have matrices");
                let v = if l.inv { mi.at(r, c) } else { m.at(r, c) };
                Ok(GCPoly::e().scale(v))
            }
            SpzKind::Symbolic if l.inv => Err(RepalgError::SymbolicInverseUnsupported {
                name: decl.name.clone(),
            }),
            _ => Ok(GCPoly::from_symbol(GCSymbol {
                name: decl.name.clone(),
                inv: l.inv,
                i: r,
                j: c,
                degree: if l.inv { 0 } else { decl.degree },
                gen: l.gen,
            })),
        }
    }
}

/// The (i,j) entry of a word: Σ over index paths of the letter-entry
/// products, per (ab)_{ij} = Σ_l a_{il} b_{lj}. The unit word gives
/// δ_{ij}e.
pub fn entry_word(
    alg: &Algebra,
    w: &Word,
    i: usize,
    j: usize,
    n: usize,
    spz: &Specialization,
) -> Result<GCPoly, RepalgError> {
    if w.is_unit() {
        return Ok(if i == j { GCPoly::e() } else { GCPoly::zero() });
    }
    // acc[c] = sum of partial products of a prefix, ending at column c+1
    let mut acc: Vec<GCPoly> = vec![GCPoly::zero(); n];
    acc[i - 1] = GCPoly::e();
    for &l in w.letters() {
        let mut next = vec![GCPoly::zero(); n];
        for (r0, p) in acc.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (c0, slot) in next.iter_mut().enumerate() {
                let le = spz.letter_entry(alg, l, r0 + 1, c0 + 1)?;
                if !le.is_zero() {
                    *slot = slot.add(&p.mul(&le));
                }
            }
        }
        acc = next;
    }
    Ok(acc.swap_remove(j - 1))
}

pub fn entry(
    alg: &Algebra,
    a: &NCPoly,
    i: usize,
    j: usize,
    n: usize,
    spz: &Specialization,
) -> Result<GCPoly, RepalgError> {
    let mut out = GCPoly::zero();
    for (w, c) in a.terms() {
        out = out.add(&entry_word(alg, w, i, j, n, spz)?.scale(c));
    }
    Ok(out)
}

/// tr(a) = Σᵢ a_{ii}.
pub fn trace(
    alg: &Algebra,
    a: &NCPoly,
    n: usize,
    spz: &Specialization,
) -> Result<GCPoly, RepalgError> {
    let mut out = GCPoly::zero();
    for i in 1..=n {
        out = out.add(&entry(alg, a, i, i, n, spz)?);
    }
    Ok(out)
}

/// The induced bracket on A_N for one bibracket, one N, and one
/// specialization of invertible entries.
pub struct RepBracket<'a> {
    pub ev: &'a Evaluator<'a>,
    pub n: usize,
    spz: Specialization,
}

impl<'a> RepBracket<'a> {
    /// Symbolic bracket; values may involve opaque inverse-entry symbols
    /// when table values do.
    pub fn new(ev: &'a Evaluator<'a>, n: usize) -> Self {
        RepBracket {
            ev,
            n,
            spz: Specialization::with_inverse_symbols(),
        }
    }

    pub fn numeric(ev: &'a Evaluator<'a>, n: usize, seed: u64) -> Self {
        let spz = Specialization::numeric(ev.alg, n, seed);
        RepBracket { ev, n, spz }
    }

    pub fn specialization(&self) -> &Specialization {
        &self.spz
    }

    fn symbol_word(&self, s: &GCSymbol) -> Word {
        if s.inv {
            Word::gen_inv(self.ev.alg, s.gen)
        } else {
            Word::gen(self.ev.alg, s.gen)
        }
    }

    /// Generator entry a_{ij} as a polynomial.
    pub fn gen_entry(&self, g: GenId, i: usize, j: usize) -> GCPoly {
        let decl = self.ev.alg.decl(g);
        GCPoly::from_symbol(GCSymbol {
            name: decl.name.clone(),
            inv: false,
            i,
            j,
            degree: decl.degree,
            gen: g,
        })
    }

    /// {a_{ij}, b_{uv}} = ⟨⟨a,b⟩⟩′_{uj} ⟨⟨a,b⟩⟩″_{iv}
    fn bracket_symbols(&self, s: &GCSymbol, t: &GCSymbol) -> Result<GCPoly, RepalgError> {
        let v = self.ev.eval_words(&self.symbol_word(s), &self.symbol_word(t))?;
        let mut out = GCPoly::zero();
        for (legs, c) in v.terms() {
            let e0 = entry_word(self.ev.alg, &legs[0], t.i, s.j, self.n, &self.spz)?;
            let e1 = entry_word(self.ev.alg, &legs[1], s.i, t.j, self.n, &self.spz)?;
            out = out.add(&e0.mul(&e1).scale(c));
        }
        Ok(out)
    }

    fn bracket_monomials(
        &self,
        m1: &[GCSymbol],
        m2: &[GCSymbol],
    ) -> Result<GCPoly, RepalgError> {
        if m1.is_empty() || m2.is_empty() {
            return Ok(GCPoly::zero());
        }
        let d = self.ev.d();
        if m1.len() > 1 {
            // {s·m, Q} = s{m,Q} + (−1)^{|m||Q|_d} {s,Q}m
            let (s, m) = (&m1[..1], &m1[1..]);
            let sp = mono_poly(s);
            let mp = mono_poly(m);
            let t1 = sp.mul(&self.bracket_monomials(m, m2)?);
            let dm: i64 = m.iter().map(|x| x.degree).sum();
            let dq: i64 = m2.iter().map(|x| x.degree).sum();
            let t2 = self
                .bracket_monomials(s, m2)?
                .mul(&mp)
                .scale(&sign_pow(dm * (dq + d)));
            return Ok(t1.add(&t2));
        }
        if m2.len() > 1 {
            // {s, t·m} = {s,t}m + (−1)^{|s|_d|t|} t{s,m}
            let (t, m) = (&m2[..1], &m2[1..]);
            let tp = mono_poly(t);
            let mp = mono_poly(m);
            let t1 = self.bracket_monomials(m1, t)?.mul(&mp);
            let ds = m1[0].degree;
            let t2 = tp
                .mul(&self.bracket_monomials(m1, m)?)
                .scale(&sign_pow((ds + d) * t[0].degree));
            return Ok(t1.add(&t2));
        }
        self.bracket_symbols(&m1[0], &m2[0])
    }

    pub fn bracket(&self, p: &GCPoly, q: &GCPoly) -> Result<GCPoly, RepalgError> {
        let mut out = GCPoly::zero();
        for (m1, c1) in p.terms() {
            for (m2, c2) in q.terms() {
                let v = self.bracket_monomials(m1, m2)?;
                out = out.add(&v.scale(&(c1.clone() * c2.clone())));
            }
        }
        Ok(out)
    }

    /// All generator entries a_{ij}, 1 ≤ i,j ≤ N, as (symbol, poly) pairs.
    pub fn generator_entries(&self) -> Vec<(GenId, usize, usize, GCPoly)> {
        let mut out = Vec::new();
        for g in self.ev.alg.gens() {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    out.push((g, i, j, self.gen_entry(g, i, j)));
                }
            }
        }
        out
    }
}

fn mono_poly(m: &[GCSymbol]) -> GCPoly {
    let mut p = GCPoly::zero();
    p.add_term(m.to_vec(), crate::scalar::int(1));
    p
}

pub fn induced_bracket(
    ev: &Evaluator,
    p: &GCPoly,
    q: &GCPoly,
    n: usize,
) -> Result<GCPoly, RepalgError> {
    RepBracket::new(ev, n).bracket(p, q)
}

/// The tribracket-entry side of the deviation identity: for the arity-3
/// tensor T = ⟨⟨x,y,z⟩⟩, the product T′_{ab} T″_{cd} T‴_{ef}.
fn tribracket_entries(
    rb: &RepBracket,
    x: &Word,
    y: &Word,
    z: &Word,
    idx: [(usize, usize); 3],
) -> Result<GCPoly, RepalgError> {
    let t = rb.ev.tribracket_words(x, y, z)?;
    let mut out = GCPoly::zero();
    for (legs, c) in t.terms() {
        let mut prod = GCPoly::e();
        for (k, (r, s)) in idx.iter().enumerate() {
            prod = prod.mul(&entry_word(rb.ev.alg, &legs[k], *r, *s, rb.n, rb.specialization())?);
        }
        out = out.add(&prod.scale(c));
    }
    Ok(out)
}

/// d-antisymmetry of the induced bracket on all generator-entry pairs,
/// then either the d-graded Jacobi identity (when the bibracket is
/// Gerstenhaber on generators) or the full deviation identity with both
/// sides computed independently, on `tuples` sampled index tuples per
/// generator triple.
pub fn check_repalg_axioms(
    alg: &Algebra,
    spec: &BibracketSpec,
    n: usize,
    seed: u64,
    tuples: usize,
) -> Result<AxiomReport, RepalgError> {
    let ev = Evaluator::new(alg, spec);
    let rb = RepBracket::new(&ev, n);
    let d = ev.d();
    let entries = rb.generator_entries();
    let mut out = Vec::new();

    let mut cases = 0;
    let mut failure = None;
    'anti: for (ga, _, _, pa) in &entries {
        for (gb, _, _, pb) in &entries {
            cases += 1;
            let ab = rb.bracket(pa, pb)?;
            let ba = rb.bracket(pb, pa)?;
            let sign = sign_pow((alg.degree(*ga) + d) * (alg.degree(*gb) + d));
            let r = ab.add(&ba.scale(&sign));
            if !r.is_zero() {
                failure = Some(Witness {
                    inputs: vec![pa.display(), pb.display()],
                    lhs: ab.display(),
                    rhs: ba.scale(&sign).neg().display(),
                });
                break 'anti;
            }
        }
    }
    out.push(match failure {
        None => CheckResult::passed(
            "entry-antisymmetry",
            cases,
            "{P,Q} = −(−1)^{|P|_d|Q|_d}{Q,P} on all generator-entry pairs",
        ),
        Some(w) => CheckResult::failed("entry-antisymmetry", cases, "antisymmetry broken", w),
    });

    if gerstenhaber_on_generators(alg, spec)? {
        let mut cases = 0;
        let mut failure = None;
        'jac: for (ga, _, _, pa) in &entries {
            for (gb, _, _, pb) in &entries {
                for (gc, _, _, pc) in &entries {
                    cases += 1;
                    let (da, db, dc) = (
                        alg.degree(*ga) + d,
                        alg.degree(*gb) + d,
                        alg.degree(*gc) + d,
                    );
                    let t1 = rb.bracket(pa, &rb.bracket(pb, pc)?)?.scale(&sign_pow(da * dc));
                    let t2 = rb.bracket(pb, &rb.bracket(pc, pa)?)?.scale(&sign_pow(db * da));
                    let t3 = rb.bracket(pc, &rb.bracket(pa, pb)?)?.scale(&sign_pow(dc * db));
                    let r = t1.add(&t2).add(&t3);
                    if !r.is_zero() {
                        failure = Some(Witness {
                            inputs: vec![pa.display(), pb.display(), pc.display()],
                            lhs: r.display(),
                            rhs: "0".into(),
                        });
                        break 'jac;
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "entry-jacobi",
                cases,
                "d-graded Jacobi identity on all generator-entry triples",
            ),
            Some(w) => CheckResult::failed("entry-jacobi", cases, "Jacobi broken", w),
        });
    } else {
        out.push(check_deviation_identity(alg, spec, n, seed, tuples)?);
    }

    Ok(out)
}

/// Both sides of the deviation identity, computed independently: the left
/// side by nesting the induced bracket, the right side from tribracket
/// values. Index tuples (p,q,r,s,u,v) are sampled from the given seed.
pub fn check_deviation_identity(
    alg: &Algebra,
    spec: &BibracketSpec,
    n: usize,
    seed: u64,
    tuples: usize,
) -> Result<CheckResult, RepalgError> {
    let ev = Evaluator::new(alg, spec);
    let rb = RepBracket::new(&ev, n);
    let d = ev.d();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<GenId> = alg.gens().collect();
    let mut cases = 0;
    for &ga in &gens {
        for &gb in &gens {
            for &gc in &gens {
                let (da, db, dc) = (alg.degree(ga), alg.degree(gb), alg.degree(gc));
                let (wa, wb, wc) = (
                    Word::gen(alg, ga),
                    Word::gen(alg, gb),
                    Word::gen(alg, gc),
                );
                for _ in 0..tuples {
                    let mut ix = || rng.gen_range(1..=n);
                    let (p, q, r, s, u, v) = (ix(), ix(), ix(), ix(), ix(), ix());
                    cases += 1;
                    let apq = rb.gen_entry(ga, p, q);
                    let brs = rb.gen_entry(gb, r, s);
                    let cuv = rb.gen_entry(gc, u, v);
                    let lhs = rb
                        .bracket(&apq, &rb.bracket(&brs, &cuv)?)?
                        .add(
                            &rb.bracket(&brs, &rb.bracket(&cuv, &apq)?)?
                                .scale(&sign_pow((da + d) * (db + dc))),
                        )
                        .add(
                            &rb.bracket(&cuv, &rb.bracket(&apq, &brs)?)?
                                .scale(&sign_pow((da + db) * (dc + d))),
                        );
                    let rhs = tribracket_entries(&rb, &wa, &wb, &wc, [(u, q), (p, s), (r, v)])?
                        .sub(
                            &tribracket_entries(&rb, &wa, &wc, &wb, [(r, q), (p, v), (u, s)])?
                                .scale(&sign_pow((db + d) * (dc + d))),
                        );
                    if lhs != rhs {
                        return Ok(CheckResult::failed(
                            "entry-jacobi-deviation",
                            cases,
                            "deviation identity broken",
                            Witness {
                                inputs: vec![
                                    format!("{}_{p}{q}", alg.decl(ga).name),
                                    format!("{}_{r}{s}", alg.decl(gb).name),
                                    format!("{}_{u}{v}", alg.decl(gc).name),
                                ],
                                lhs: lhs.display(),
                                rhs: rhs.display(),
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckResult::passed(
        "entry-jacobi-deviation",
        cases,
        "Jacobiator matches the tribracket-entry expression on sampled tuples",
    ))
}

/// Trace compatibility: tr kills commutators of words, and generator
/// traces close under the bracket via {tr a, tr b} = tr⟨a,b⟩.
pub fn check_trace_compat(
    alg: &Algebra,
    spec: &BibracketSpec,
    n: usize,
    maxlen: usize,
    seed: u64,
) -> Result<AxiomReport, RepalgError> {
    let ev = Evaluator::new(alg, spec);
    let rb = RepBracket::new(&ev, n);
    let mut out = Vec::new();

    // tr([u,v]) = 0, symbolically on inverse-free words
    let spz = Specialization::symbolic();
    let words: Vec<Word> = alg
        .words_up_to(maxlen)
        .into_iter()
        .filter(|w| w.letters().iter().all(|l| !l.inv))
        .collect();
    let mut cases = 0;
    let mut failure = None;
    'comm: for u in &words {
        for v in &words {
            let comm = NCPoly::commutator(
                &NCPoly::from_term(u.clone(), crate::scalar::int(1)),
                &NCPoly::from_term(v.clone(), crate::scalar::int(1)),
                alg,
            );
            cases += 1;
            let t = trace(alg, &comm, n, &spz)?;
            if !t.is_zero() {
                failure = Some(Witness {
                    inputs: vec![u.display(alg), v.display(alg)],
                    lhs: t.display(),
                    rhs: "0".into(),
                });
                break 'comm;
            }
        }
    }
    out.push(match failure {
        None => CheckResult::passed(
            "trace-kills-commutators",
            cases,
            "tr vanishes on commutators of words",
        ),
        Some(w) => CheckResult::failed("trace-kills-commutators", cases, "nonzero trace", w),
    });

    // same sweep through a numeric specialization when inverses exist
    if alg.gens().any(|g| alg.decl(g).invertible) {
        let spz = Specialization::numeric(alg, n, seed);
        let words = alg.words_up_to(maxlen);
        let mut cases = 0;
        let mut failure = None;
        'numc: for u in &words {
            for v in &words {
                let comm = NCPoly::commutator(
                    &NCPoly::from_term(u.clone(), crate::scalar::int(1)),
                    &NCPoly::from_term(v.clone(), crate::scalar::int(1)),
                    alg,
                );
                cases += 1;
                let t = trace(alg, &comm, n, &spz)?;
                if !t.is_zero() {
                    failure = Some(Witness {
                        inputs: vec![u.display(alg), v.display(alg)],
                        lhs: t.display(),
                        rhs: "0".into(),
                    });
                    break 'numc;
                }
            }
        }
        out.push(match failure {
            None => CheckResult::passed(
                "trace-kills-commutators-numeric",
                cases,
                "tr vanishes on commutators including inverse letters (numeric entries)",
            ),
            Some(w) => {
                CheckResult::failed("trace-kills-commutators-numeric", cases, "nonzero trace", w)
            }
        });
    }

    // {tr a, tr b} = tr⟨a,b⟩ on generators
    let mut cases = 0;
    let mut failure = None;
    'tr: for ga in alg.gens() {
        for gb in alg.gens() {
            cases += 1;
            let ta = trace(alg, &NCPoly::gen(alg, ga), n, rb.specialization())?;
            let tb = trace(alg, &NCPoly::gen(alg, gb), n, rb.specialization())?;
            let lhs = rb.bracket(&ta, &tb)?;
            let assoc = ev.assoc_bracket(&NCPoly::gen(alg, ga), &NCPoly::gen(alg, gb))?;
            let rhs = trace(alg, &assoc, n, rb.specialization())?;
            if lhs != rhs {
                failure = Some(Witness {
                    inputs: vec![
                        format!("tr {}", alg.decl(ga).name),
                        format!("tr {}", alg.decl(gb).name),
                    ],
                    lhs: lhs.display(),
                    rhs: rhs.display(),
                });
                break 'tr;
            }
        }
    }
    out.push(match failure {
        None => CheckResult::passed(
            "trace-bracket-compatibility",
            cases,
            "{tr a, tr b} = tr⟨a,b⟩ on all generator pairs",
        ),
        Some(w) => CheckResult::failed(
            "trace-bracket-compatibility",
            cases,
            "trace does not carry the bracket",
            w,
        ),
    });

    Ok(out)
}

/// g·a_{ij} = (g⁻¹)_{ik} a_{kl} g_{lj}, extended as an algebra
/// automorphism.
pub fn group_act(g: &QMatrix, p: &GCPoly) -> Result<GCPoly, RepalgError> {
    let gi = g.inverse()?;
    let n = g.size();
    let sym_image = |s: &GCSymbol| -> GCPoly {
        let mut out = GCPoly::zero();
        for k in 1..=n {
            for l in 1..=n {
                let c = gi.at(s.i, k).clone() * g.at(l, s.j).clone();
                let mut sym = s.clone();
                sym.i = k;
                sym.j = l;
                out.add_term(vec![sym], c);
            }
        }
        out
    };
    let mut out = GCPoly::zero();
    for (m, c) in p.terms() {
        let mut prod = GCPoly::e();
        for s in m {
            prod = prod.mul(&sym_image(s));
        }
        out = out.add(&prod.scale(c));
    }
    Ok(out)
}

/// w·a_{ij} = a_{ik} w_{kj} − w_{ik} a_{kj}, extended as a degree-0
/// derivation.
pub fn lie_act(w: &QMatrix, p: &GCPoly) -> GCPoly {
    let n = w.size();
    let sym_image = |s: &GCSymbol| -> GCPoly {
        let mut out = GCPoly::zero();
        for k in 1..=n {
            let mut right = s.clone();
            right.j = k;
            out.add_term(vec![right], w.at(k, s.j).clone());
            let mut left = s.clone();
            left.i = k;
            out.add_term(vec![left], -w.at(s.i, k).clone());
        }
        out
    };
    let mut out = GCPoly::zero();
    for (m, c) in p.terms() {
        for t in 0..m.len() {
            let mut prod = mono_poly(&m[..t]);
            prod = prod.mul(&sym_image(&m[t]));
            prod = prod.mul(&mono_poly(&m[t + 1..]));
            out = out.add(&prod.scale(c));
        }
    }
    out
}

pub enum ActionInput {
    Group(QMatrix),
    Lie(QMatrix),
}

/// Equivariance of the induced bracket under one group element or one
/// Lie-algebra element, on all generator-entry pairs, together with the
/// structural property of the action itself (multiplicativity for g,
/// the derivation rule for w) on products of entries.
pub fn act_and_check(
    alg: &Algebra,
    spec: &BibracketSpec,
    n: usize,
    input: &ActionInput,
) -> Result<AxiomReport, RepalgError> {
    let ev = Evaluator::new(alg, spec);
    let rb = RepBracket::new(&ev, n);
    let entries = rb.generator_entries();
    let mut out = Vec::new();
    match input {
        ActionInput::Group(g) => {
            g.inverse()?;
            let mut cases = 0;
            let mut failure = None;
            'eq: for (_, _, _, pa) in &entries {
                for (_, _, _, pb) in &entries {
                    cases += 1;
                    let lhs = group_act(g, &rb.bracket(pa, pb)?)?;
                    let rhs = rb.bracket(&group_act(g, pa)?, &group_act(g, pb)?)?;
                    if lhs != rhs {
                        failure = Some(Witness {
                            inputs: vec![pa.display(), pb.display()],
                            lhs: lhs.display(),
                            rhs: rhs.display(),
                        });
                        break 'eq;
                    }
                }
            }
            out.push(match failure {
                None => CheckResult::passed(
                    "group-equivariance",
                    cases,
                    "g{P,Q} = {gP,gQ} on all generator-entry pairs",
                ),
                Some(w) => CheckResult::failed("group-equivariance", cases, "not equivariant", w),
            });

            let mut cases = 0;
            let mut failure = None;
            'mult: for (_, _, _, pa) in &entries {
                for (_, _, _, pb) in &entries {
                    cases += 1;
                    let lhs = group_act(g, &pa.mul(pb))?;
                    let rhs = group_act(g, pa)?.mul(&group_act(g, pb)?);
                    if lhs != rhs {
                        failure = Some(Witness {
                            inputs: vec![pa.display(), pb.display()],
                            lhs: lhs.display(),
                            rhs: rhs.display(),
                        });
                        break 'mult;
                    }
                }
            }
            out.push(match failure {
                None => CheckResult::passed(
                    "group-action-multiplicative",
                    cases,
                    "g(PQ) = g(P)g(Q) on products of generator entries",
                ),
                Some(w) => {
                    CheckResult::failed("group-action-multiplicative", cases, "not an algebra map", w)
                }
            });
        }
        ActionInput::Lie(w) => {
            let mut cases = 0;
            let mut failure = None;
            'leq: for (_, _, _, pa) in &entries {
                for (_, _, _, pb) in &entries {
                    cases += 1;
                    let lhs = lie_act(w, &rb.bracket(pa, pb)?);
                    let rhs = rb
                        .bracket(&lie_act(w, pa), pb)?
                        .add(&rb.bracket(pa, &lie_act(w, pb))?);
                    if lhs != rhs {
                        failure = Some(Witness {
                            inputs: vec![pa.display(), pb.display()],
                            lhs: lhs.display(),
                            rhs: rhs.display(),
                        });
                        break 'leq;
                    }
                }
            }
            out.push(match failure {
                None => CheckResult::passed(
                    "lie-equivariance",
                    cases,
                    "w{P,Q} = {wP,Q} + {P,wQ} on all generator-entry pairs",
                ),
                Some(wt) => CheckResult::failed("lie-equivariance", cases, "not equivariant", wt),
            });

            let mut cases = 0;
            let mut failure = None;
            'der: for (_, _, _, pa) in &entries {
                for (_, _, _, pb) in &entries {
                    cases += 1;
                    let lhs = lie_act(w, &pa.mul(pb));
                    let rhs = lie_act(w, pa).mul(pb).add(&pa.mul(&lie_act(w, pb)));
                    if lhs != rhs {
                        failure = Some(Witness {
                            inputs: vec![pa.display(), pb.display()],
                            lhs: lhs.display(),
                            rhs: rhs.display(),
                        });
                        break 'der;
                    }
                }
            }
            out.push(match failure {
                None => CheckResult::passed(
                    "lie-action-derivation",
                    cases,
                    "w(PQ) = w(P)Q + Pw(Q) on products of generator entries",
                ),
                Some(wt) => {
                    CheckResult::failed("lie-action-derivation", cases, "not a derivation", wt)
                }
            });
        }
    }
    Ok(out)
}
