//! Hamiltonian reduction: push the bracket associated with a bibracket
//! down to a quotient B = A/AμA presented explicitly by generator images.
//!
//! The target B is a monomial algebra on graded variables: distinct
//! variables commute up to Koszul sign, while powers of one variable
//! never cross each other, so odd squares survive. Laurent variables
//! (degree 0) may carry negative exponents.
//!
//! The reduced structure is layered. The associated bracket ⟨-,-⟩ maps
//! the ideal into AμA in its second slot, so ⟨x,-⟩ descends to a
//! derivation of B; in the first slot the ideal only dies modulo
//! commutators, so the d-graded Lie bracket lives on the cyclic quotient
//! ČB = B/[B,B]. Since monomials quasi-commute, every commutator is a
//! scalar multiple of a single monomial: ČB is spanned by the monomials
//! in which no odd-degree variable carries an even exponent ≥ 2. When
//! every variable is even, [B,B] = 0 and the cyclic bracket is a full
//! Gerstenhaber bracket on B itself.
//!
//! All brackets are computed upstairs through canonical word lifts;
//! `reduce_H0` sweeps the coherence of that computation (independence of
//! lifts, ideal stability, antisymmetry and Jacobi in ČB, the derivation
//! rule in B) and errors out when μ fails to die.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{Algebra, GenId, Letter, Word};
use crate::bracket::{mul_legs, BracketError, Evaluator};
use crate::moment::MomentSpec;
use crate::ncpoly::NCPoly;
use crate::report::{AxiomReport, CheckResult, Witness};
use crate::scalar::{sign_pow, One, Scalar, Zero};

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("moment element does not die in the quotient: image {image}")]
    RelationNotKilled { image: String },
    #[error("unknown generator `{name}` in quotient presentation")]
    UnknownGenerator { name: String },
    #[error("image of generator `{name}` is not a generator of the target")]
    ImageNotGenerator { name: String },
    #[error("generator `{name}` has degree {left} but its image has degree {right}")]
    DegreeMismatch { name: String, left: i64, right: i64 },
    #[error("invertible generator `{name}` needs a laurent image")]
    NonInvertibleImage { name: String },
    #[error("laurent variable `{name}` must have degree 0")]
    LaurentDegree { name: String },
    #[error("two generators share the image `{name}`")]
    ImageShared { name: String },
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommGen {
    pub name: String,
    pub degree: i64,
    pub laurent: bool,
}

/// The target algebra: an ordered list of graded variables. Monomials are
/// exponent vectors over this list.
#[derive(Debug, Clone)]
pub struct CommTarget {
    gens: Vec<CommGen>,
}

impl CommTarget {
    pub fn new(gens: &[(&str, i64, bool)]) -> Result<Self, ReduceError> {
        let mut out = Vec::new();
        for &(name, degree, laurent) in gens {
            if laurent && degree != 0 {
                return Err(ReduceError::LaurentDegree { name: name.to_string() });
            }
            out.push(CommGen {
                name: name.to_string(),
                degree,
                laurent,
            });
        }
        Ok(CommTarget { gens: out })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gen(&self, idx: usize) -> &CommGen {
        &self.gens[idx]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn mono_degree(&self, m: &[i64]) -> i64 {
        m.iter()
            .zip(&self.gens)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Koszul sign exponent for concatenating ordered monomials m1·m2:
    /// every variable of m2 crosses the higher-indexed variables of m1.
    /// Same-variable factors never cross, so odd squares are kept.
    fn mul_sign(&self, m1: &[i64], m2: &[i64]) -> i64 {
        let mut exp = 0i64;
        for i in 0..self.gens.len() {
            for j in 0..i {
                exp += m1[i] * m2[j] * self.gens[i].degree * self.gens[j].degree;
            }
        }
        exp
    }

    /// A monomial spans a commutator precisely when some odd variable
    /// carries an even exponent ≥ 2 (split one factor off: the crossing
    /// count is odd). Everything else survives in ČB.
    pub fn dies_cyclically(&self, m: &[i64]) -> bool {
        m.iter()
            .zip(&self.gens)
            .any(|(e, g)| g.degree % 2 != 0 && *e >= 2 && e % 2 == 0)
    }

    fn display_mono(&self, m: &[i64]) -> String {
        let mut out = String::new();
        for (e, g) in m.iter().zip(&self.gens) {
            if *e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            if *e == 1 {
                out.push_str(&g.name);
            } else {
                let _ = write!(out, "{}^{}", g.name, e);
            }
        }
        if out.is_empty() {
            "e".to_string()
        } else {
            out
        }
    }
}

/// Finite sum of exponent-vector monomials with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommPoly {
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl CommPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn e(target: &CommTarget) -> Self {
        let mut p = Self::zero();
        p.terms.insert(vec![0; target.len()], Scalar::one());
        p
    }

    pub fn var(target: &CommTarget, idx: usize, exp: i64) -> Self {
        let mut m = vec![0; target.len()];
        m[idx] = exp;
        let mut p = Self::zero();
        p.terms.insert(m, Scalar::one());
        p
    }

    pub fn from_mono(m: Vec<i64>, coeff: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: Vec<i64>, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
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

    pub fn mul(&self, other: &Self, target: &CommTarget) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Vec<i64> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let sign = sign_pow(target.mul_sign(m1, m2));
                out.add_term(m, c1.clone() * c2.clone() * sign);
            }
        }
        out
    }

    /// Image in ČB = B/[B,B]: drop the commutator monomials.
    pub fn cyclic_reduce(&self, target: &CommTarget) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if !target.dies_cyclically(m) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Total degree when homogeneous; None for 0 or mixed.
    pub fn degree(&self, target: &CommTarget) -> Option<i64> {
        let mut degs = self.terms.keys().map(|m| target.mono_degree(m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn display(&self, target: &CommTarget) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "({c}) * {}", target.display_mono(m));
        }
        out
    }
}

/// Generator-to-variable projection A → B. Every generator of A maps to a
/// distinct variable of matching degree; invertible generators must land
/// on laurent variables so that inverse letters project.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub target: CommTarget,
    images: BTreeMap<GenId, usize>,
    preimages: BTreeMap<usize, GenId>,
}

impl QuotientPresentation {
    pub fn new(
        alg: &Algebra,
        target: CommTarget,
        images: &[(&str, &str)],
    ) -> Result<Self, ReduceError> {
        let mut map = BTreeMap::new();
        let mut pre = BTreeMap::new();
        for &(a_name, b_name) in images {
            let g = alg
                .lookup(a_name)
                .ok_or_else(|| ReduceError::UnknownGenerator { name: a_name.to_string() })?;
            let idx = target
                .lookup(b_name)
                .ok_or_else(|| ReduceError::ImageNotGenerator { name: b_name.to_string() })?;
            let decl = alg.decl(g);
            let img = target.gen(idx);
            if decl.degree != img.degree {
                return Err(ReduceError::DegreeMismatch {
                    name: a_name.to_string(),
                    left: decl.degree,
                    right: img.degree,
                });
            }
            if decl.invertible && !img.laurent {
                return Err(ReduceError::NonInvertibleImage { name: a_name.to_string() });
            }
            map.insert(g, idx);
            if pre.insert(idx, g).is_some() {
                return Err(ReduceError::ImageShared { name: b_name.to_string() });
            }
        }
        for g in alg.gens() {
            if !map.contains_key(&g) {
                return Err(ReduceError::UnknownGenerator {
                    name: alg.decl(g).name.clone(),
                });
            }
        }
        Ok(QuotientPresentation {
            target,
            images: map,
            preimages: pre,
        })
    }

    pub fn image_of(&self, g: GenId) -> usize {
        self.images[&g]
    }

    fn project_word(&self, w: &Word) -> CommPoly {
        let mut acc = CommPoly::e(&self.target);
        for l in w.letters() {
            let idx = self.images[&l.gen];
            let exp = if l.inv { -1 } else { 1 };
            acc = acc.mul(&CommPoly::var(&self.target, idx, exp), &self.target);
        }
        acc
    }

    pub fn project(&self, p: &NCPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (w, c) in p.terms() {
            out = out.add(&self.project_word(w).scale(c));
        }
        out
    }

    /// Canonical word lift of a monomial: variables in index order,
    /// |exponent| letters each (inverse letters for negative exponents).
    /// Sorted lifts never cross a lower-indexed variable, so the lift
    /// projects back to the monomial with coefficient exactly +1.
    pub fn lift(&self, alg: &Algebra, m: &[i64]) -> Word {
        let mut letters = Vec::new();
        for (idx, &e) in m.iter().enumerate() {
            let g = self.preimages[&idx];
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter { gen: g, inv: e < 0 });
            }
        }
        match Word::from_letters(alg, letters) {
            Some(w) => w,
            None => Word::unit(alg.objects().next().expect("nonempty quiver")),
        }
    }
}

/// The reduced structure: the associated bracket pushed into B through
/// canonical lifts. `derivation` is the second-slot map ⟨x,-⟩: B → B;
/// `bracket_cyclic` is the d-graded Lie bracket on ČB.
pub struct ReducedBracket<'a> {
    pub ev: &'a Evaluator<'a>,
    pub q: QuotientPresentation,
    d: i64,
    table: BTreeMap<(usize, usize), CommPoly>,
}

impl std::fmt::Debug for ReducedBracket<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ReducedBracket")
            .field("d", &self.d)
            .field("table", &self.table)
            .finish_non_exhaustive()
    }
}

impl<'a> ReducedBracket<'a> {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn table_entry(&self, i: usize, j: usize) -> Option<&CommPoly> {
        self.table.get(&(i, j))
    }

    /// ⟨u,v⟩ of A-elements, multiplied out and projected to B.
    pub fn pairing(&self, u: &NCPoly, v: &NCPoly) -> Result<CommPoly, ReduceError> {
        let t = self.ev.bb_eval(u, v)?;
        Ok(self.q.project(&mul_legs(&t, self.ev.alg)))
    }

    fn word_poly(&self, m: &[i64]) -> NCPoly {
        NCPoly::from_term(self.q.lift(self.ev.alg, m), Scalar::one())
    }

    /// ⟨x,-⟩ applied to a monomial, with value in B. The first slot only
    /// depends on the cyclic class of x, the second is exact.
    pub fn derivation(&self, x: &[i64], m: &[i64]) -> Result<CommPoly, ReduceError> {
        self.pairing(&self.word_poly(x), &self.word_poly(m))
    }

    /// The Lie bracket of ČB on monomial classes: zero when either side
    /// dies cyclically, the cyclically reduced pairing of lifts otherwise.
    pub fn bracket_cyclic(&self, m1: &[i64], m2: &[i64]) -> Result<CommPoly, ReduceError> {
        let t = &self.q.target;
        if t.dies_cyclically(m1) || t.dies_cyclically(m2) {
            return Ok(CommPoly::zero());
        }
        Ok(self.derivation(m1, m2)?.cyclic_reduce(t))
    }

    /// Linear extension of `bracket_cyclic` in the second slot.
    pub fn bracket_cyclic_poly(&self, m1: &[i64], p: &CommPoly) -> Result<CommPoly, ReduceError> {
        let mut out = CommPoly::zero();
        for (m2, c) in p.terms() {
            out = out.add(&self.bracket_cyclic(m1, m2)?.scale(c));
        }
        Ok(out)
    }
}

/// Push the bracket onto B = A/AμA. Errors with `RelationNotKilled` when
/// μ has a nonzero image; otherwise returns the reduced structure and the
/// coherence report.
#[allow(non_snake_case)]
pub fn reduce_H0<'a>(
    ev: &'a Evaluator<'a>,
    m: &MomentSpec,
    q: &QuotientPresentation,
    maxlen: usize,
) -> Result<(ReducedBracket<'a>, AxiomReport), ReduceError> {
    let alg = ev.alg;
    let d = ev.d();

    let mu_img = q.project(&m.mu);
    if !mu_img.is_zero() {
        return Err(ReduceError::RelationNotKilled {
            image: mu_img.display(&q.target),
        });
    }

    let mut checks = Vec::new();
    checks.push(CheckResult::passed(
        "relation-killed",
        1,
        "projection of μ vanishes in B",
    ));

    let gens: Vec<_> = alg.gens().collect();
    let mut table = BTreeMap::new();
    for &ga in &gens {
        for &gb in &gens {
            let v = ev.eval_words(&Word::gen(alg, ga), &Word::gen(alg, gb))?;
            let assoc = mul_legs(&v, alg);
            table.insert((q.image_of(ga), q.image_of(gb)), q.project(&assoc));
        }
    }
    let rb = ReducedBracket {
        ev,
        q: q.clone(),
        d,
        table,
    };
    let t = &rb.q.target;

    let mut words: Vec<Word> = alg.objects().map(Word::unit).collect();
    words.extend(alg.words_up_to(maxlen));

    // Distinct projected monomials and their cyclically surviving subset.
    let mut mono_set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for w in &words {
        let img = q.project(&NCPoly::from_term(w.clone(), Scalar::one()));
        for (m2, _) in img.terms() {
            mono_set.insert(m2.clone());
        }
    }
    let monos: Vec<Vec<i64>> = mono_set.into_iter().collect();
    let cyclic_monos: Vec<Vec<i64>> = monos
        .iter()
        .filter(|m| !t.dies_cyclically(m))
        .cloned()
        .collect();

    // Words compute the bracket only through their image classes: the
    // first slot through ČB, the second through B.
    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for u in &words {
            for w in &words {
                cases += 1;
                let up = NCPoly::from_term(u.clone(), Scalar::one());
                let wp = NCPoly::from_term(w.clone(), Scalar::one());
                let lhs = rb.pairing(&up, &wp)?.cyclic_reduce(t);
                let pu = q.project(&up);
                let pw = q.project(&wp);
                let mut rhs = CommPoly::zero();
                for (m1, c1) in pu.cyclic_reduce(t).terms() {
                    for (m2, c2) in pw.terms() {
                        rhs = rhs.add(&rb.bracket_cyclic(m1, m2)?.scale(&(c1.clone() * c2)));
                    }
                }
                if lhs != rhs {
                    fail = Some(Witness {
                        inputs: vec![u.display(alg), w.display(alg)],
                        lhs: lhs.display(t),
                        rhs: rhs.display(t),
                    });
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "image-compatibility",
                cases,
                "cyclic image of ⟨u,w⟩_A matches the lift-computed bracket",
            ),
            Some(w) => CheckResult::failed("image-compatibility", cases, "mismatch", w),
        });
    }

    // ⟨A, AμA⟩ lands in AμA (dies in B); ⟨AμA, A⟩ lands in AμA + [A,A]
    // (dies in ČB).
    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for u in &words {
            for w in &words {
                cases += 1;
                let up = NCPoly::from_term(u.clone(), Scalar::one());
                let muw = m.mu.mul(&NCPoly::from_term(w.clone(), Scalar::one()), alg);
                let wmu = NCPoly::from_term(w.clone(), Scalar::one()).mul(&m.mu, alg);
                for ideal in [&muw, &wmu] {
                    let right = rb.pairing(&up, ideal)?;
                    if !right.is_zero() {
                        fail = Some(Witness {
                            inputs: vec![u.display(alg), w.display(alg)],
                            lhs: right.display(t),
                            rhs: "0".to_string(),
                        });
                        break 'outer;
                    }
                    let left = rb.pairing(ideal, &up)?.cyclic_reduce(t);
                    if !left.is_zero() {
                        fail = Some(Witness {
                            inputs: vec![u.display(alg), w.display(alg)],
                            lhs: left.display(t),
                            rhs: "0".to_string(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "ideal-stability",
                cases,
                "⟨A,AμA⟩ dies in B; ⟨AμA,A⟩ dies in ČB",
            ),
            Some(w) => CheckResult::failed("ideal-stability", cases, "nonzero image", w),
        });
    }

    {
        let mut fail = None;
        let mut cases = 0usize;
        'outer: for m1 in &cyclic_monos {
            for m2 in &cyclic_monos {
                cases += 1;
                let lhs = rb.bracket_cyclic(m1, m2)?;
                let shift = sign_pow((t.mono_degree(m1) + d) * (t.mono_degree(m2) + d));
                let rhs = rb.bracket_cyclic(m2, m1)?.scale(&-shift);
                if lhs != rhs {
                    fail = Some(Witness {
                        inputs: vec![t.display_mono(m1), t.display_mono(m2)],
                        lhs: lhs.display(t),
                        rhs: rhs.display(t),
                    });
                    break 'outer;
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "lie-antisymmetry",
                cases,
                "{P,Q} = -(-1)^{|P|_d|Q|_d} {Q,P} in ČB",
            ),
            Some(w) => CheckResult::failed("lie-antisymmetry", cases, "mismatch", w),
        });
    }

    {
        let total = cyclic_monos.len().pow(3).max(1);
        let stride = (total / 80).max(1);
        let mut fail = None;
        let mut cases = 0usize;
        let mut idx = 0usize;
        'outer: for m1 in &cyclic_monos {
            for m2 in &cyclic_monos {
                for m3 in &cyclic_monos {
                    idx += 1;
                    if idx % stride != 0 {
                        continue;
                    }
                    cases += 1;
                    let (d1, d2, d3) = (
                        t.mono_degree(m1) + d,
                        t.mono_degree(m2) + d,
                        t.mono_degree(m3) + d,
                    );
                    let term1 = rb
                        .bracket_cyclic_poly(m1, &rb.bracket_cyclic(m2, m3)?)?
                        .scale(&sign_pow(d1 * d3));
                    let term2 = rb
                        .bracket_cyclic_poly(m2, &rb.bracket_cyclic(m3, m1)?)?
                        .scale(&sign_pow(d2 * d1));
                    let term3 = rb
                        .bracket_cyclic_poly(m3, &rb.bracket_cyclic(m1, m2)?)?
                        .scale(&sign_pow(d3 * d2));
                    let total = term1.add(&term2).add(&term3);
                    if !total.is_zero() {
                        fail = Some(Witness {
                            inputs: vec![
                                t.display_mono(m1),
                                t.display_mono(m2),
                                t.display_mono(m3),
                            ],
                            lhs: total.display(t),
                            rhs: "0".to_string(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "lie-jacobi",
                cases,
                "(-1)^{|P|_d|R|_d}{P,{Q,R}} + cyclic = 0 in ČB",
            ),
            Some(w) => CheckResult::failed("lie-jacobi", cases, "mismatch", w),
        });
    }

    {
        let total = (cyclic_monos.len() * monos.len() * monos.len()).max(1);
        let stride = (total / 80).max(1);
        let mut fail = None;
        let mut cases = 0usize;
        let mut idx = 0usize;
        'outer: for x in &cyclic_monos {
            for m1 in &monos {
                for m2 in &monos {
                    idx += 1;
                    if idx % stride != 0 {
                        continue;
                    }
                    cases += 1;
                    let prod = CommPoly::from_mono(m1.clone(), Scalar::one())
                        .mul(&CommPoly::from_mono(m2.clone(), Scalar::one()), t);
                    let mut lhs = CommPoly::zero();
                    for (mm, c) in prod.terms() {
                        lhs = lhs.add(&rb.derivation(x, mm)?.scale(c));
                    }
                    let sign = sign_pow((t.mono_degree(x) + d) * t.mono_degree(m1));
                    let rhs = rb
                        .derivation(x, m1)?
                        .mul(&CommPoly::from_mono(m2.clone(), Scalar::one()), t)
                        .add(
                            &CommPoly::from_mono(m1.clone(), Scalar::one())
                                .mul(&rb.derivation(x, m2)?, t)
                                .scale(&sign),
                        );
                    if lhs != rhs {
                        fail = Some(Witness {
                            inputs: vec![
                                t.display_mono(x),
                                t.display_mono(m1),
                                t.display_mono(m2),
                            ],
                            lhs: lhs.display(t),
                            rhs: rhs.display(t),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "derivation-leibniz",
                cases,
                "⟨x,PQ⟩ = ⟨x,P⟩Q + (-1)^{|x|_d|P|} P⟨x,Q⟩ in B",
            ),
            Some(w) => CheckResult::failed("derivation-leibniz", cases, "mismatch", w),
        });
    }

    // With every variable even, [B,B] = 0 and ČB = B: the cyclic bracket
    // is a Gerstenhaber bracket on B, so the first slot obeys Leibniz too.
    if (0..t.len()).all(|i| t.gen(i).degree % 2 == 0) {
        let total = monos.len().pow(3).max(1);
        let stride = (total / 80).max(1);
        let mut fail = None;
        let mut cases = 0usize;
        let mut idx = 0usize;
        'outer: for m1 in &monos {
            for m2 in &monos {
                for m3 in &monos {
                    idx += 1;
                    if idx % stride != 0 {
                        continue;
                    }
                    cases += 1;
                    let prod = CommPoly::from_mono(m1.clone(), Scalar::one())
                        .mul(&CommPoly::from_mono(m2.clone(), Scalar::one()), t);
                    let mut lhs = CommPoly::zero();
                    for (mm, c) in prod.terms() {
                        lhs = lhs.add(&rb.bracket_cyclic(mm, m3)?.scale(c));
                    }
                    let sign = sign_pow(t.mono_degree(m2) * (t.mono_degree(m3) + d));
                    let rhs = CommPoly::from_mono(m1.clone(), Scalar::one())
                        .mul(&rb.bracket_cyclic(m2, m3)?, t)
                        .add(
                            &rb.bracket_cyclic(m1, m3)?
                                .mul(&CommPoly::from_mono(m2.clone(), Scalar::one()), t)
                                .scale(&sign),
                        );
                    if lhs != rhs {
                        fail = Some(Witness {
                            inputs: vec![
                                t.display_mono(m1),
                                t.display_mono(m2),
                                t.display_mono(m3),
                            ],
                            lhs: lhs.display(t),
                            rhs: rhs.display(t),
                        });
                        break 'outer;
                    }
                }
            }
        }
        checks.push(match fail {
            None => CheckResult::passed(
                "gerstenhaber-first-slot",
                cases,
                "{PQ,R} = P{Q,R} + (-1)^{|Q||R|_d} {P,R}Q on commutative B",
            ),
            Some(w) => CheckResult::failed("gerstenhaber-first-slot", cases, "mismatch", w),
        });
    }

    Ok((rb, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::single_object;
    use crate::bracket::BibracketSpec;
    use crate::expr::parse_element;
    use crate::report::all_pass;
    use crate::scalar::int;

    fn laurent_fixture(n: i64) -> (Algebra, BibracketSpec) {
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
        (alg, spec)
    }

    fn sphere_fixture(p: i64, q: i64) -> (Algebra, BibracketSpec) {
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
        (alg, spec)
    }

    #[test]
    fn comm_poly_koszul_signs() {
        let t = CommTarget::new(&[("u", 1, false), ("v", 2, false)]).unwrap();
        let u = CommPoly::var(&t, 0, 1);
        let v = CommPoly::var(&t, 1, 1);
        // |u||v| = 2 even: uv = vu
        assert_eq!(u.mul(&v, &t), v.mul(&u, &t));
        // odd squares survive in B
        let uu = u.mul(&u, &t);
        assert!(!uu.is_zero());
        assert_eq!(uu.degree(&t), Some(2));

        let t2 = CommTarget::new(&[("a", 1, false), ("b", 3, false)]).unwrap();
        let a = CommPoly::var(&t2, 0, 1);
        let b = CommPoly::var(&t2, 1, 1);
        // |a||b| = 3 odd: ab = -ba
        assert_eq!(a.mul(&b, &t2), b.mul(&a, &t2).neg());
    }

    #[test]
    fn cyclic_reduction_kills_even_powers_of_odd_variables() {
        let t = CommTarget::new(&[("u", 1, false), ("v", 2, false)]).unwrap();
        assert!(!t.dies_cyclically(&[1, 0]));
        assert!(t.dies_cyclically(&[2, 0]));
        assert!(!t.dies_cyclically(&[3, 0]));
        assert!(t.dies_cyclically(&[2, 5]));
        assert!(!t.dies_cyclically(&[0, 4]));

        let p = CommPoly::from_mono(vec![2, 1], int(3)).add(&CommPoly::from_mono(vec![1, 1], int(5)));
        assert_eq!(p.cyclic_reduce(&t), CommPoly::from_mono(vec![1, 1], int(5)));
    }

    #[test]
    fn laurent_variables_invert() {
        let t = CommTarget::new(&[("X", 0, true)]).unwrap();
        let x = CommPoly::var(&t, 0, 1);
        let xinv = CommPoly::var(&t, 0, -1);
        assert_eq!(x.mul(&xinv, &t), CommPoly::e(&t));
        assert!(CommTarget::new(&[("X", 1, true)]).is_err());
    }

    #[test]
    fn presentation_validation() {
        let (alg, _) = laurent_fixture(3);
        let t = CommTarget::new(&[("X", 0, true), ("Y", 1, false)]).unwrap();
        assert!(QuotientPresentation::new(&alg, t.clone(), &[("x", "X"), ("y", "Y")]).is_ok());
        assert!(matches!(
            QuotientPresentation::new(&alg, t.clone(), &[("x", "Y"), ("y", "X")]),
            Err(ReduceError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            QuotientPresentation::new(&alg, t.clone(), &[("x", "X")]),
            Err(ReduceError::UnknownGenerator { .. })
        ));
        let t2 = CommTarget::new(&[("X", 0, false), ("Y", 1, false)]).unwrap();
        assert!(matches!(
            QuotientPresentation::new(&alg, t2, &[("x", "X"), ("y", "Y")]),
            Err(ReduceError::NonInvertibleImage { .. })
        ));
    }

    #[test]
    fn lift_round_trip() {
        let (alg, _) = laurent_fixture(3);
        let t = CommTarget::new(&[("X", 0, true), ("Y", 1, false)]).unwrap();
        let q = QuotientPresentation::new(&alg, t, &[("x", "X"), ("y", "Y")]).unwrap();
        for m in [vec![2, 1], vec![-3, 2], vec![0, 0], vec![-1, 0]] {
            let w = q.lift(&alg, &m);
            let back = q.project(&NCPoly::from_term(w, crate::scalar::int(1)));
            assert_eq!(back, CommPoly::from_mono(m, crate::scalar::int(1)));
        }
    }

    #[test]
    fn laurent_reduction_table() {
        for n in [3i64, 4] {
            let (alg, spec) = laurent_fixture(n);
            let ev = Evaluator::new(&alg, &spec);
            let mu = parse_element(&alg, "x^-1*y*x - y").unwrap();
            let t = CommTarget::new(&[("X", 0, true), ("Y", n - 2, false)]).unwrap();
            let q = QuotientPresentation::new(&alg, t, &[("x", "X"), ("y", "Y")]).unwrap();
            let (rb, report) = reduce_H0(&ev, &MomentSpec::new(mu), &q, 3).unwrap();
            assert!(all_pass(&report), "n = {n}: {report:?}");

            let t = &rb.q.target;
            let x = vec![1, 0];
            let y = vec![0, 1];
            assert!(rb.bracket_cyclic(&x, &x).unwrap().is_zero());
            assert_eq!(
                rb.bracket_cyclic(&x, &y).unwrap(),
                CommPoly::var(t, 0, 1).neg()
            );
            assert_eq!(rb.bracket_cyclic(&y, &x).unwrap(), CommPoly::var(t, 0, 1));
            assert!(rb.bracket_cyclic(&y, &y).unwrap().is_zero());

            // inverse letters in the lift: ⟨x⁻¹, y⟩ = x⁻¹
            assert_eq!(
                rb.bracket_cyclic(&[-1, 0], &y).unwrap(),
                CommPoly::var(t, 0, -1)
            );
        }
    }

    #[test]
    fn sphere_reduction_table() {
        let (alg, spec) = sphere_fixture(2, 3);
        let ev = Evaluator::new(&alg, &spec);
        let mu = parse_element(&alg, "x*y - y*x").unwrap();
        let t = CommTarget::new(&[("x", 1, false), ("y", 2, false)]).unwrap();
        let q = QuotientPresentation::new(&alg, t, &[("x", "x"), ("y", "y")]).unwrap();
        let (rb, report) = reduce_H0(&ev, &MomentSpec::new(mu), &q, 3).unwrap();
        assert!(all_pass(&report), "{report:?}");

        let t = &rb.q.target;
        let x = vec![1, 0];
        let y = vec![0, 1];
        let e = CommPoly::e(t);
        assert_eq!(rb.bracket_cyclic(&x, &y).unwrap(), e);
        assert_eq!(rb.bracket_cyclic(&y, &x).unwrap(), e.neg());
        assert!(rb.bracket_cyclic(&x, &x).unwrap().is_zero());
        assert!(rb.bracket_cyclic(&y, &y).unwrap().is_zero());

        // x² survives in B but is a commutator, so its cyclic class is 0
        // and it brackets to 0 on the ČB level.
        let xx = CommPoly::var(t, 0, 1).mul(&CommPoly::var(t, 0, 1), t);
        assert!(!xx.is_zero());
        assert!(t.dies_cyclically(&[2, 0]));
        assert!(rb.bracket_cyclic(&[2, 0], &[1, 1]).unwrap().is_zero());

        // The raw pairing on A shows why the first slot must be cyclic:
        // ⟨x², xy⟩ = 0 while ⟨xy, x²⟩ = -2x², and -2x² dies in ČB.
        let x2 = parse_element(&alg, "x*x").unwrap();
        let xy = parse_element(&alg, "x*y").unwrap();
        assert!(rb.pairing(&x2, &xy).unwrap().is_zero());
        let raw = rb.pairing(&xy, &x2).unwrap();
        assert_eq!(raw, CommPoly::from_mono(vec![2, 0], int(-2)));
        assert!(raw.cyclic_reduce(t).is_zero());

        // a nonzero length-2 class: ⟨xy, y⟩ = y
        assert_eq!(
            rb.bracket_cyclic(&[1, 1], &y).unwrap(),
            CommPoly::var(t, 1, 1)
        );
    }

    #[test]
    fn unkilled_relation_is_an_error() {
        let (alg, spec) = laurent_fixture(3);
        let ev = Evaluator::new(&alg, &spec);
        // degree matches -d, but y does not die in B
        let mu = parse_element(&alg, "y").unwrap();
        let t = CommTarget::new(&[("X", 0, true), ("Y", 1, false)]).unwrap();
        let q = QuotientPresentation::new(&alg, t, &[("x", "X"), ("y", "Y")]).unwrap();
        let err = reduce_H0(&ev, &MomentSpec::new(mu), &q, 2).unwrap_err();
        match err {
            ReduceError::RelationNotKilled { image } => {
                assert_eq!(image, "(1) * Y");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
