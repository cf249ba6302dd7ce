//! Quivers, graded generators, and words.
//!
//! The underlying algebra is the graded algebra of a finite quiver: objects,
//! homogeneous generators with a source and a target, and words subject only
//! to composability and the cancellation g·g⁻¹ = g⁻¹·g = 1 for generators
//! declared invertible. Products compose left to right: in a word `f g`, the
//! target of `f` must equal the source of `g` (the product is g∘f read as
//! path composition). Non-composable products are zero.
//!
//! Invertible generators are restricted to degree 0 with source = target.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub usize);

#[derive(Debug, Clone)]
pub struct GeneratorDecl {
    pub name: String,
    pub degree: i64,
    pub source: ObjId,
    pub target: ObjId,
    pub invertible: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("generator `{0}` is declared invertible but is not a degree-0 endomorphism")]
    InvalidInvertible(String),
    #[error("object id out of range")]
    UnknownObject,
}

/// A finite quiver with graded generators. Immutable once populated.
#[derive(Debug, Clone, Default)]
pub struct Algebra {
    objects: Vec<String>,
    gens: Vec<GeneratorDecl>,
    by_name: BTreeMap<String, GenId>,
}

impl Algebra {
    pub fn new() -> Self {
        Self::default()
    }

    /// Look up an object by name, creating it if absent.
    pub fn object(&mut self, name: &str) -> ObjId {
        if let Some(i) = self.objects.iter().position(|o| o == name) {
            return ObjId(i);
        }
        self.objects.push(name.to_string());
        ObjId(self.objects.len() - 1)
    }

    pub fn add_generator(&mut self, decl: GeneratorDecl) -> Result<GenId, AlgebraError> {
        if self.by_name.contains_key(&decl.name) {
            return Err(AlgebraError::DuplicateName(decl.name));
        }
        if decl.source.0 >= self.objects.len() || decl.target.0 >= self.objects.len() {
            return Err(AlgebraError::UnknownObject);
        }
        if decl.invertible && (decl.degree != 0 || decl.source != decl.target) {
            return Err(AlgebraError::InvalidInvertible(decl.name));
        }
        let id = GenId(self.gens.len());
        self.by_name.insert(decl.name.clone(), id);
        self.gens.push(decl);
        Ok(id)
    }

    pub fn gen_count(&self) -> usize {
        self.gens.len()
    }

    pub fn obj_count(&self) -> usize {
        self.objects.len()
    }

    pub fn gens(&self) -> impl Iterator<Item = GenId> {
        (0..self.gens.len()).map(GenId)
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn decl(&self, g: GenId) -> &GeneratorDecl {
        &self.gens[g.0]
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.by_name.get(name).copied()
    }

    pub fn lookup_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn degree(&self, g: GenId) -> i64 {
        self.gens[g.0].degree
    }

    pub fn letter_source(&self, l: Letter) -> ObjId {
        let d = self.decl(l.gen);
        if l.inv {
            d.target
        } else {
            d.source
        }
    }

    pub fn letter_target(&self, l: Letter) -> ObjId {
        let d = self.decl(l.gen);
        if l.inv {
            d.source
        } else {
            d.target
        }
    }

    /// All normal-form nonempty words of length 1..=maxlen, in word order.
    /// Letters range over all generators plus inverses of invertible ones.
    pub fn words_up_to(&self, maxlen: usize) -> Vec<Word> {
        let mut alphabet = Vec::new();
        for g in self.gens() {
            alphabet.push(Letter { gen: g, inv: false });
            if self.decl(g).invertible {
                alphabet.push(Letter { gen: g, inv: true });
            }
        }
        let mut out = Vec::new();
        let mut layer: Vec<Word> = alphabet
            .iter()
            .map(|&l| Word::from_letters(self, vec![l]).expect("single letters are composable"))
            .collect();
        for _ in 0..maxlen {
            let mut next = Vec::new();
            for w in &layer {
                out.push(w.clone());
                for &l in &alphabet {
                    if self.letter_source(l) != w.target(self) {
                        continue;
                    }
                    // keep only words already in normal form; shorter
                    // normalizations are produced by their own layer
                    if let Some(&last) = w.letters.last() {
                        if last.gen == l.gen && last.inv != l.inv {
                            continue;
                        }
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(Word {
                        obj: w.obj,
                        letters,
                    });
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        out.sort();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: GenId,
    pub inv: bool,
}

impl Letter {
    pub fn positive(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: false,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A normal-form word: either the unit e_X of an object X (empty letter
/// sequence) or a composable sequence of letters with no adjacent g·g⁻¹.
/// `obj` is the source object; for the empty word it is the unit's object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    obj: ObjId,
    letters: Vec<Letter>,
}

impl Word {
    pub fn unit(obj: ObjId) -> Word {
        Word {
            obj,
            letters: Vec::new(),
        }
    }

    pub fn gen(alg: &Algebra, g: GenId) -> Word {
        Word {
            obj: alg.decl(g).source,
            letters: vec![Letter { gen: g, inv: false }],
        }
    }

    pub fn gen_inv(alg: &Algebra, g: GenId) -> Word {
        debug_assert!(alg.decl(g).invertible);
        Word {
            obj: alg.decl(g).target,
            letters: vec![Letter { gen: g, inv: true }],
        }
    }

    /// Builds a word from letters, checking composability and cancelling
    /// adjacent inverse pairs. Returns None for a non-composable sequence.
    pub fn from_letters(alg: &Algebra, letters: Vec<Letter>) -> Option<Word> {
        if letters.is_empty() {
            return None; // a unit word needs an explicit object
        }
        for pair in letters.windows(2) {
            if alg.letter_target(pair[0]) != alg.letter_source(pair[1]) {
                return None;
            }
        }
        let obj = alg.letter_source(letters[0]);
        let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
        for l in letters {
            match stack.last() {
                Some(&top) if top.gen == l.gen && top.inv != l.inv => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Some(Word {
            obj,
            letters: stack,
        })
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn source(&self) -> ObjId {
        self.obj
    }

    pub fn target(&self, alg: &Algebra) -> ObjId {
        match self.letters.last() {
            Some(&l) => alg.letter_target(l),
            None => self.obj,
        }
    }

    /// Sum of letter degrees. Inverse letters contribute 0 because
    /// invertible generators have degree 0.
    pub fn degree(&self, alg: &Algebra) -> i64 {
        self.letters.iter().map(|l| alg.degree(l.gen)).sum()
    }

    /// Concatenation; None when the factors do not compose (product is 0).
    pub fn mul(&self, other: &Word, alg: &Algebra) -> Option<Word> {
        if self.target(alg) != other.obj {
            return None;
        }
        if self.letters.is_empty() {
            return Some(other.clone());
        }
        if other.letters.is_empty() {
            return Some(self.clone());
        }
        let mut stack = self.letters.clone();
        for &l in &other.letters {
            match stack.last() {
                Some(&top) if top.gen == l.gen && top.inv != l.inv => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Some(Word {
            obj: self.obj,
            letters: stack,
        })
    }

    /// The inverse word, defined when every letter is invertible.
    pub fn inverse(&self, alg: &Algebra) -> Option<Word> {
        if self
            .letters
            .iter()
            .any(|l| !alg.decl(l.gen).invertible)
        {
            return None;
        }
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Some(Word {
            obj: self.target(alg),
            letters,
        })
    }

    pub fn display(&self, alg: &Algebra) -> String {
        if self.letters.is_empty() {
            return format!("e_{}", alg.obj_name(self.obj));
        }
        self.letters
            .iter()
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
}

/// Word order: by length, then letter sequence, then object (which only
/// separates the unit words of distinct objects).
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.obj.cmp(&other.obj))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "e_#{}", self.obj.0)
        } else {
            let parts: Vec<String> = self
                .letters
                .iter()
                .map(|l| {
                    if l.inv {
                        format!("g{}^-1", l.gen.0)
                    } else {
                        format!("g{}", l.gen.0)
                    }
                })
                .collect();
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// One-object algebra with the given (name, degree, invertible) generators.
/// Convenience constructor used by presets and tests.
pub fn single_object(gens: &[(&str, i64, bool)]) -> (Algebra, Vec<GenId>) {
    let mut alg = Algebra::new();
    let pt = alg.object("pt");
    let ids = gens
        .iter()
        .map(|&(name, degree, invertible)| {
            alg.add_generator(GeneratorDecl {
                name: name.to_string(),
                degree,
                source: pt,
                target: pt,
                invertible,
            })
            .expect("valid generator")
        })
        .collect();
    (alg, ids)
}
