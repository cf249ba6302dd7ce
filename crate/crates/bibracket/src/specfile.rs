//! Line-oriented spec files describing a model: the algebra, its
//! bibracket table, Hopf structure, moment element, quotient
//! presentation, and any Lie algebra to check.
//!
//! The format is strict: sections in brackets, one declaration per line,
//! `#` comments, unknown sections and keys rejected, and every referenced
//! name must be declared. See docs/spec-format.md for the grammar.
//!
//! ```text
//! [algebra]
//! object pt
//! generator x : pt -> pt, degree 0, invertible
//!
//! [bibracket]
//! degree -1
//! entry x y = (-1) * x (x) 1
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{single_object, Algebra, GeneratorDecl};
use crate::bracket::BibracketSpec;
use crate::expr::parse_element;
use crate::hopf::{CoproductKind, HopfDecl};
use crate::lie::GradedLie;
use crate::moment::MomentSpec;
use crate::ncpoly::NCPoly;
use crate::reduce::{CommTarget, QuotientPresentation};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("spec has no [{section}] section, required by this command")]
    MissingSection { section: String },
}

fn perr(line: usize, message: impl Into<String>) -> SpecError {
    SpecError::Parse {
        line,
        message: message.into(),
    }
}

/// A parsed spec file. Optional sections are `None` when absent; the
/// runner decides which ones a command requires.
pub struct SpecFile {
    pub name: String,
    pub digest: String,
    pub alg: Algebra,
    pub bibracket: Option<BibracketSpec>,
    pub hopf: Option<HopfDecl>,
    pub moment: Option<MomentSpec>,
    pub reduction: Option<QuotientPresentation>,
    pub lie: Option<GradedLie>,
}

impl SpecFile {
    pub fn require_bibracket(&self) -> Result<&BibracketSpec, SpecError> {
        self.bibracket.as_ref().ok_or_else(|| SpecError::MissingSection {
            section: "bibracket".to_string(),
        })
    }

    pub fn require_hopf(&self) -> Result<&HopfDecl, SpecError> {
        self.hopf.as_ref().ok_or_else(|| SpecError::MissingSection {
            section: "hopf".to_string(),
        })
    }

    pub fn require_moment(&self) -> Result<&MomentSpec, SpecError> {
        self.moment.as_ref().ok_or_else(|| SpecError::MissingSection {
            section: "moment".to_string(),
        })
    }

    pub fn require_reduction(&self) -> Result<&QuotientPresentation, SpecError> {
        self.reduction.as_ref().ok_or_else(|| SpecError::MissingSection {
            section: "reduction".to_string(),
        })
    }

    pub fn require_lie(&self) -> Result<&GradedLie, SpecError> {
        self.lie.as_ref().ok_or_else(|| SpecError::MissingSection {
            section: "lie".to_string(),
        })
    }
}

pub fn parse_spec_file(path: &Path) -> Result<SpecFile, SpecError> {
    let contents = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    parse_spec_str(&name, &contents)
}

type Lines = Vec<(usize, String)>;

#[derive(Default)]
struct Sections {
    algebra: Lines,
    bibracket: Lines,
    hopf: Lines,
    moment: Lines,
    reduction: Lines,
    lie: Lines,
}

pub fn parse_spec_str(name: &str, contents: &str) -> Result<SpecFile, SpecError> {
    let digest = {
        let mut h = Sha256::new();
        h.update(contents.as_bytes());
        let mut out = String::new();
        for b in h.finalize() {
            let _ = write!(out, "{b:02x}");
        }
        out
    };

    let mut sections = Sections::default();
    let mut current: Option<&mut Lines> = None;
    let mut seen: Vec<String> = Vec::new();
    for (idx, raw) in contents.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(section) = line.strip_prefix('[') {
            let section = section
                .strip_suffix(']')
                .ok_or_else(|| perr(lineno, "unterminated section header"))?
                .trim();
            if seen.iter().any(|s| s == section) {
                return Err(perr(lineno, format!("duplicate section [{section}]")));
            }
            seen.push(section.to_string());
            current = Some(match section {
                "algebra" => &mut sections.algebra,
                "bibracket" => &mut sections.bibracket,
                "hopf" => &mut sections.hopf,
                "moment" => &mut sections.moment,
                "reduction" => &mut sections.reduction,
                "lie" => &mut sections.lie,
                other => return Err(perr(lineno, format!("unknown section [{other}]"))),
            });
            continue;
        }
        match current {
            Some(ref mut lines) => lines.push((lineno, line.to_string())),
            None => return Err(perr(lineno, "declaration before any section header")),
        }
    }

    let has = |s: &str| seen.iter().any(|x| x == s);
    for s in ["bibracket", "hopf", "moment", "reduction"] {
        if has(s) && !has("algebra") {
            return Err(perr(0, format!("[{s}] requires an [algebra] section")));
        }
    }

    let alg = build_algebra(&sections.algebra)?;
    let bibracket = has("bibracket")
        .then(|| build_bibracket(&alg, &sections.bibracket))
        .transpose()?;
    let hopf = has("hopf")
        .then(|| build_hopf(&alg, &sections.hopf))
        .transpose()?;
    let moment = has("moment")
        .then(|| build_moment(&alg, &sections.moment))
        .transpose()?;
    let reduction = has("reduction")
        .then(|| build_reduction(&alg, &sections.reduction))
        .transpose()?;
    let lie = has("lie")
        .then(|| build_lie(&sections.lie))
        .transpose()?;

    Ok(SpecFile {
        name: name.to_string(),
        digest,
        alg,
        bibracket,
        hopf,
        moment,
        reduction,
        lie,
    })
}

/// Splits "key rest" on the first whitespace run.
fn key_rest(line: &str) -> (&str, &str) {
    match line.find(char::is_whitespace) {
        Some(p) => (&line[..p], line[p..].trim_start()),
        None => (line, ""),
    }
}

/// Splits "lhs = rhs" on the first '='.
fn eq_split(lineno: usize, s: &str) -> Result<(&str, &str), SpecError> {
    let p = s
        .find('=')
        .ok_or_else(|| perr(lineno, "expected `=`"))?;
    Ok((s[..p].trim(), s[p + 1..].trim()))
}

fn parse_i64(lineno: usize, s: &str) -> Result<i64, SpecError> {
    s.parse()
        .map_err(|_| perr(lineno, format!("expected an integer, found `{s}`")))
}

/// "name : src -> tgt, degree K[, invertible]"
fn build_algebra(lines: &Lines) -> Result<Algebra, SpecError> {
    let mut alg = Algebra::new();
    for &(lineno, ref line) in lines {
        let (key, rest) = key_rest(line);
        match key {
            "object" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(perr(lineno, "expected `object NAME`"));
                }
                alg.object(rest);
            }
            "generator" => {
                let (name, sig) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(lineno, "expected `generator NAME : SRC -> TGT, degree K`"))?;
                let (src, tail) = sig
                    .split_once("->")
                    .ok_or_else(|| perr(lineno, "expected `SRC -> TGT` in generator signature"))?;
                let mut parts = tail.split(',').map(str::trim);
                let tgt = parts
                    .next()
                    .filter(|t| !t.is_empty())
                    .ok_or_else(|| perr(lineno, "missing target object"))?;
                let mut degree = None;
                let mut invertible = false;
                for attr in parts {
                    if let Some(k) = attr.strip_prefix("degree") {
                        degree = Some(parse_i64(lineno, k.trim())?);
                    } else if attr == "invertible" {
                        invertible = true;
                    } else {
                        return Err(perr(lineno, format!("unknown generator attribute `{attr}`")));
                    }
                }
                let degree =
                    degree.ok_or_else(|| perr(lineno, "generator is missing `degree K`"))?;
                let source = alg
                    .lookup_object(src.trim())
                    .ok_or_else(|| perr(lineno, format!("undeclared object `{}`", src.trim())))?;
                let target = alg
                    .lookup_object(tgt)
                    .ok_or_else(|| perr(lineno, format!("undeclared object `{tgt}`")))?;
                alg.add_generator(GeneratorDecl {
                    name: name.trim().to_string(),
                    degree,
                    source,
                    target,
                    invertible,
                })
                .map_err(|e| perr(lineno, e.to_string()))?;
            }
            other => return Err(perr(lineno, format!("unknown [algebra] key `{other}`"))),
        }
    }
    Ok(alg)
}

/// "degree K" once, then "entry A B = tensor-expr" lines.
fn build_bibracket(alg: &Algebra, lines: &Lines) -> Result<BibracketSpec, SpecError> {
    let mut d = None;
    let mut entries: Vec<(usize, String, String, String)> = Vec::new();
    for &(lineno, ref line) in lines {
        let (key, rest) = key_rest(line);
        match key {
            "degree" => {
                if d.replace(parse_i64(lineno, rest)?).is_some() {
                    return Err(perr(lineno, "duplicate `degree`"));
                }
            }
            "entry" => {
                let (lhs, rhs) = eq_split(lineno, rest)?;
                let mut names = lhs.split_whitespace();
                let (a, b) = match (names.next(), names.next(), names.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => return Err(perr(lineno, "expected `entry A B = value`")),
                };
                entries.push((lineno, a.to_string(), b.to_string(), rhs.to_string()));
            }
            other => return Err(perr(lineno, format!("unknown [bibracket] key `{other}`"))),
        }
    }
    let d = d.ok_or_else(|| perr(0, "[bibracket] is missing `degree K`"))?;
    let refs: Vec<(&str, &str, &str)> = entries
        .iter()
        .map(|(_, a, b, v)| (a.as_str(), b.as_str(), v.as_str()))
        .collect();
    BibracketSpec::from_exprs(alg, d, &refs)
        .map_err(|e| perr(entries.first().map_or(0, |e| e.0), e.to_string()))
}

/// "coproduct G = primitive | group-like | explicit: tensor-expr", with
/// "counit G = rational" and "antipode G = expr" completing explicit
/// declarations.
fn build_hopf(alg: &Algebra, lines: &Lines) -> Result<HopfDecl, SpecError> {
    enum RawKind {
        Primitive,
        GroupLike,
        Explicit(String),
    }
    let mut kinds: BTreeMap<String, (usize, RawKind)> = BTreeMap::new();
    let mut counits: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut antipodes: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for &(lineno, ref line) in lines {
        let (key, rest) = key_rest(line);
        let (g, rhs) = eq_split(lineno, rest)?;
        let slot = (lineno, rhs.to_string());
        match key {
            "coproduct" => {
                let kind = match rhs {
                    "primitive" => RawKind::Primitive,
                    "group-like" => RawKind::GroupLike,
                    other => match other.strip_prefix("explicit:") {
                        Some(expr) => RawKind::Explicit(expr.trim().to_string()),
                        None => {
                            return Err(perr(
                                lineno,
                                format!("unknown coproduct kind `{other}`"),
                            ))
                        }
                    },
                };
                if kinds.insert(g.to_string(), (lineno, kind)).is_some() {
                    return Err(perr(lineno, format!("duplicate coproduct for `{g}`")));
                }
            }
            "counit" => {
                if counits.insert(g.to_string(), slot).is_some() {
                    return Err(perr(lineno, format!("duplicate counit for `{g}`")));
                }
            }
            "antipode" => {
                if antipodes.insert(g.to_string(), slot).is_some() {
                    return Err(perr(lineno, format!("duplicate antipode for `{g}`")));
                }
            }
            other => return Err(perr(lineno, format!("unknown [hopf] key `{other}`"))),
        }
    }

    for (g, &(lineno, _)) in counits.iter().chain(antipodes.iter()) {
        match kinds.get(g) {
            Some((_, RawKind::Explicit(_))) => {}
            _ => {
                return Err(perr(
                    lineno,
                    format!("`{g}` has a counit/antipode override but no explicit coproduct"),
                ))
            }
        }
    }

    let mut list: Vec<(String, CoproductKind)> = Vec::new();
    for (g, (lineno, kind)) in kinds {
        let kind = match kind {
            RawKind::Primitive => CoproductKind::Primitive,
            RawKind::GroupLike => CoproductKind::GroupLike,
            RawKind::Explicit(expr) => {
                let cop = crate::expr::parse_tensor2(alg, &expr)
                    .map_err(|e| perr(lineno, e.to_string()))?;
                let (cline, counit) = counits
                    .get(&g)
                    .ok_or_else(|| perr(lineno, format!("explicit coproduct for `{g}` needs `counit {g} = ...`")))?;
                let counit = Scalar::from_str(counit)
                    .map_err(|_| perr(*cline, format!("expected a rational, found `{counit}`")))?;
                let (aline, antipode) = antipodes
                    .get(&g)
                    .ok_or_else(|| perr(lineno, format!("explicit coproduct for `{g}` needs `antipode {g} = ...`")))?;
                let antipode = parse_element(alg, antipode)
                    .map_err(|e| perr(*aline, e.to_string()))?;
                CoproductKind::Explicit {
                    cop,
                    counit,
                    antipode,
                }
            }
        };
        list.push((g, kind));
    }
    let refs: Vec<(&str, CoproductKind)> =
        list.iter().map(|(g, k)| (g.as_str(), k.clone())).collect();
    HopfDecl::from_kinds(alg, &refs).map_err(|e| perr(0, e.to_string()))
}

/// "mu = expr"
fn build_moment(alg: &Algebra, lines: &Lines) -> Result<MomentSpec, SpecError> {
    let mut mu: Option<NCPoly> = None;
    for &(lineno, ref line) in lines {
        let (key, rest) = key_rest(line);
        match key {
            "mu" => {
                let rhs = rest
                    .strip_prefix('=')
                    .ok_or_else(|| perr(lineno, "expected `mu = expr`"))?
                    .trim();
                let p = parse_element(alg, rhs).map_err(|e| perr(lineno, e.to_string()))?;
                if mu.replace(p).is_some() {
                    return Err(perr(lineno, "duplicate `mu`"));
                }
            }
            other => return Err(perr(lineno, format!("unknown [moment] key `{other}`"))),
        }
    }
    let mu = mu.ok_or_else(|| perr(0, "[moment] is missing `mu = expr`"))?;
    Ok(MomentSpec::new(mu))
}

/// "target NAME : degree K[, laurent]" then "image GEN = NAME".
fn build_reduction(
    alg: &Algebra,
    lines: &Lines,
) -> Result<QuotientPresentation, SpecError> {
    let mut targets: Vec<(String, i64, bool)> = Vec::new();
    let mut images: Vec<(String, String)> = Vec::new();
    for &(lineno, ref line) in lines {
        let (key, rest) = key_rest(line);
        match key {
            "target" => {
                let (name, attrs) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(lineno, "expected `target NAME : degree K`"))?;
                let mut degree = None;
                let mut laurent = false;
                for attr in attrs.split(',').map(str::trim) {
                    if let Some(k) = attr.strip_prefix("degree") {
                        degree = Some(parse_i64(lineno, k.trim())?);
                    } else if attr == "laurent" {
                        laurent = true;
                    } else {
                        return Err(perr(lineno, format!("unknown target attribute `{attr}`")));
                    }
                }
                let degree =
                    degree.ok_or_else(|| perr(lineno, "target is missing `degree K`"))?;
                targets.push((name.trim().to_string(), degree, laurent));
            }
            "image" => {
                let (g, b) = eq_split(lineno, rest)?;
                images.push((g.to_string(), b.to_string()));
            }
            other => return Err(perr(lineno, format!("unknown [reduction] key `{other}`"))),
        }
    }
    let trefs: Vec<(&str, i64, bool)> = targets
        .iter()
        .map(|(n, d, l)| (n.as_str(), *d, *l))
        .collect();
    let target = CommTarget::new(&trefs).map_err(|e| perr(0, e.to_string()))?;
    let irefs: Vec<(&str, &str)> = images
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    QuotientPresentation::new(alg, target, &irefs).map_err(|e| perr(0, e.to_string()))
}

/// "basis NAME : degree K" then "bracket A B = expr", where the
/// expression must be linear in the basis names.
fn build_lie(lines: &Lines) -> Result<GradedLie, SpecError> {
    let mut basis: Vec<(String, i64)> = Vec::new();
    let mut raw_brackets: Vec<(usize, String, String, String)> = Vec::new();
    for &(lineno, ref line) in lines {
        let (key, rest) = key_rest(line);
        match key {
            "basis" => {
                let (name, attr) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(lineno, "expected `basis NAME : degree K`"))?;
                let attr = attr.trim();
                let k = attr
                    .strip_prefix("degree")
                    .ok_or_else(|| perr(lineno, "expected `degree K` after `:`"))?;
                basis.push((name.trim().to_string(), parse_i64(lineno, k.trim())?));
            }
            "bracket" => {
                let (lhs, rhs) = eq_split(lineno, rest)?;
                let mut names = lhs.split_whitespace();
                let (a, b) = match (names.next(), names.next(), names.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => return Err(perr(lineno, "expected `bracket A B = value`")),
                };
                raw_brackets.push((lineno, a.to_string(), b.to_string(), rhs.to_string()));
            }
            other => return Err(perr(lineno, format!("unknown [lie] key `{other}`"))),
        }
    }
    if basis.is_empty() {
        return Err(perr(0, "[lie] declares no basis elements"));
    }

    // parse bracket values through a scratch algebra on the basis names
    let decls: Vec<(&str, i64, bool)> = basis
        .iter()
        .map(|(n, d)| (n.as_str(), *d, false))
        .collect();
    let (scratch, gens) = single_object(&decls);
    let mut brackets: Vec<(String, String, Vec<(Scalar, String)>)> = Vec::new();
    for (lineno, a, b, rhs) in raw_brackets {
        let p = parse_element(&scratch, &rhs).map_err(|e| perr(lineno, e.to_string()))?;
        let mut coeffs = Vec::new();
        for (w, c) in p.terms() {
            if w.letters().len() != 1 || w.letters()[0].inv {
                return Err(perr(
                    lineno,
                    "bracket values must be linear combinations of basis elements",
                ));
            }
            let idx = gens
                .iter()
                .position(|g| *g == w.letters()[0].gen)
                .expect("scratch generator");
            coeffs.push((c.clone(), basis[idx].0.clone()));
        }
        brackets.push((a, b, coeffs));
    }
    GradedLie::from_parts(&basis, &brackets).map_err(|e| perr(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    const NSC: &str = "\
# the S1 x S2 model
[algebra]
object pt
generator x : pt -> pt, degree 0, invertible
generator y : pt -> pt, degree 1

[bibracket]
degree -1
entry x x = 0
entry x y = (-1) * x (x) 1
entry y x = 1 (x) x
entry y y = 1 (x) y + (-1) * y (x) 1

[hopf]
coproduct x = group-like
coproduct y = primitive

[moment]
mu = x^-1*y*x - y

[reduction]
target X : degree 0, laurent
target Y : degree 1
image x = X
image y = Y
";

    #[test]
    fn full_spec_parses() {
        let spec = parse_spec_str("nsc.spec", NSC).unwrap();
        assert_eq!(spec.digest.len(), 64);
        assert_eq!(spec.alg.gens().count(), 2);
        let bb = spec.bibracket.as_ref().unwrap();
        assert_eq!(bb.degree_d(), -1);
        assert!(spec.hopf.is_some());
        assert!(spec.moment.is_some());
        assert!(spec.reduction.is_some());
        assert!(spec.lie.is_none());
        assert!(matches!(
            spec.require_lie(),
            Err(SpecError::MissingSection { .. })
        ));
    }

    #[test]
    fn digest_tracks_contents() {
        let a = parse_spec_str("a.spec", NSC).unwrap();
        let b = parse_spec_str("b.spec", NSC).unwrap();
        assert_eq!(a.digest, b.digest);
        let c = parse_spec_str("c.spec", &NSC.replace("S1 x S2", "S1 x S3")).unwrap();
        assert_ne!(a.digest, c.digest);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let bad = NSC.replace("object pt", "objekt pt");
        assert!(matches!(
            parse_spec_str("bad.spec", &bad),
            Err(SpecError::Parse { line: 3, .. })
        ));

        let bad = format!("{NSC}\n[frobnicate]\n");
        assert!(matches!(
            parse_spec_str("bad.spec", &bad),
            Err(SpecError::Parse { .. })
        ));

        let bad = NSC.replace("mu = ", "moment-element = ");
        assert!(parse_spec_str("bad.spec", &bad).is_err());
    }

    #[test]
    fn undeclared_names_are_rejected() {
        let bad = NSC.replace("entry y y =", "entry y z =");
        assert!(parse_spec_str("bad.spec", &bad).is_err());

        let bad = NSC.replace("image y = Y", "image y = Z");
        assert!(parse_spec_str("bad.spec", &bad).is_err());

        let headless = "[bibracket]\ndegree 0\n";
        assert!(parse_spec_str("bad.spec", headless).is_err());
    }

    #[test]
    fn lie_section_parses() {
        let spec = "\
[lie]
basis a : degree 0
basis b : degree 0
basis c : degree 0
bracket a b = c
";
        let s = parse_spec_str("heis.spec", spec).unwrap();
        let l = s.lie.as_ref().unwrap();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.bracket_basis(0, 1), &[int(0), int(0), int(1)]);
        assert_eq!(l.bracket_basis(1, 0), &[int(0), int(0), int(-1)]);

        let bad = spec.replace("= c", "= c*c");
        assert!(parse_spec_str("bad.spec", &bad).is_err());
    }

    #[test]
    fn explicit_coproduct_roundtrip() {
        let spec = "\
[algebra]
object pt
generator y : pt -> pt, degree 2

[hopf]
coproduct y = explicit: y (x) 1 + 1 (x) y
counit y = 0
antipode y = (-1) * y
";
        let s = parse_spec_str("exp.spec", spec).unwrap();
        assert!(s.hopf.is_some());

        let missing = spec.replace("counit y = 0\n", "");
        assert!(parse_spec_str("bad.spec", &missing).is_err());

        let broken = spec.replace("antipode y = (-1) * y", "antipode y = y");
        assert!(parse_spec_str("bad.spec", &broken).is_err());
    }
}
