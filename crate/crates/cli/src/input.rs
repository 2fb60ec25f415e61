//! Turning command-line flags and JSON documents into ideals.

use std::fmt;

use serde::Deserialize;
use symdepth::families::{self, TransversalIdeal};
use symdepth::{Decomposition, ExponentVector, MonomialIdeal, PrimaryComponent, Ring, VarSet};

/// An error with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }
}

impl From<symdepth::Error> for CliError {
    fn from(e: symdepth::Error) -> Self {
        CliError { code: if e.is_precondition() { 3 } else { 2 }, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A parsed monomial: variable names with exponents, in order of appearance.
type Factors = Vec<(String, u32)>;

/// Parses `name(^int)?` factors joined by `*`; whitespace is ignored and
/// `1` stands for the empty product. `offset` shifts reported columns.
pub fn parse_monomial(text: &str, offset: usize) -> CliResult<Factors> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let column = |k: usize| offset + chars.get(k).map_or(text.len(), |&(i, _)| i) + 1;
    let err = |k: usize, what: &str| {
        CliError::input(format!("malformed monomial {:?} at column {}: {what}", text.trim(), column(k)))
    };
    if chars.is_empty() {
        return Err(err(0, "empty monomial"));
    }
    if chars.len() == 1 && chars[0].1 == '1' {
        return Ok(Vec::new());
    }
    let mut factors = Vec::new();
    let mut k = 0;
    loop {
        let start = k;
        if !chars.get(k).is_some_and(|&(_, c)| c.is_ascii_alphabetic() || c == '_') {
            return Err(err(k, "expected a variable name"));
        }
        while chars.get(k).is_some_and(|&(_, c)| c.is_ascii_alphanumeric() || c == '_') {
            k += 1;
        }
        let name: String = chars[start..k].iter().map(|&(_, c)| c).collect();
        let mut exponent = 1;
        if chars.get(k).is_some_and(|&(_, c)| c == '^') {
            k += 1;
            let digits = k;
            while chars.get(k).is_some_and(|&(_, c)| c.is_ascii_digit()) {
                k += 1;
            }
            if digits == k {
                return Err(err(k, "expected an exponent after '^'"));
            }
            let text: String = chars[digits..k].iter().map(|&(_, c)| c).collect();
            exponent = text.parse().map_err(|_| err(digits, "exponent out of range"))?;
        }
        factors.push((name, exponent));
        match chars.get(k) {
            None => return Ok(factors),
            Some(&(_, '*')) => k += 1,
            Some(_) => return Err(err(k, "expected '*' or the end of the monomial")),
        }
    }
}

/// Parses a comma-separated generator list.
pub fn parse_generator_list(text: &str) -> CliResult<Vec<Factors>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        out.push(parse_monomial(part, offset)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// Variable names in order of first appearance.
pub fn infer_vars(gens: &[Factors]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for (name, _) in gens.iter().flatten() {
        if !names.contains(name) {
            names.push(name.clone());
        }
    }
    names
}

fn to_exponents(ring: &Ring, factors: &Factors) -> CliResult<ExponentVector> {
    let mut v = vec![0; ring.n()];
    for (name, e) in factors {
        let i = ring
            .index_of(name)
            .ok_or_else(|| CliError::input(format!("unknown variable {name:?}")))?;
        v[i] += e;
    }
    Ok(ExponentVector::new(v))
}

pub fn ideal_from(ring: &Ring, gens: &[Factors]) -> CliResult<MonomialIdeal> {
    let gens = gens.iter().map(|g| to_exponents(ring, g)).collect::<CliResult<Vec<_>>>()?;
    Ok(MonomialIdeal::new(ring, gens)?)
}

pub fn ring_from(names: &[String]) -> CliResult<Ring> {
    Ok(Ring::new(names.iter().cloned())?)
}

/// Family parameters from flags or JSON.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyParams {
    pub m: Option<u32>,
    pub d: Option<u32>,
    pub s: Option<u32>,
}

fn need(value: Option<u32>, flag: &str, family: &str) -> CliResult<u32> {
    value.ok_or_else(|| CliError::input(format!("family {family} needs --{flag}")))
}

pub fn family(name: &str, params: &FamilyParams) -> CliResult<Decomposition> {
    let triple = match name {
        "typeA" => families::type_a(need(params.m, "m", name)?)?,
        "typeB" => families::type_b(need(params.m, "m", name)?)?,
        "typeC" => families::type_c(need(params.m, "m", name)?, params.d.unwrap_or(0))?,
        "example6" => families::example6(),
        "thm28" => return Ok(TransversalIdeal::new(need(params.s, "s", name)?)?.decomposition()?),
        other => {
            return Err(CliError::input(format!(
                "unknown family {other:?}; expected typeA, typeB, typeC, thm28 or example6"
            )))
        }
    };
    Ok(families::assemble(&triple)?)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    support: Vec<String>,
    gens: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    name: String,
    #[serde(default)]
    params: FamilyParams,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealDocument {
    vars: Option<Vec<String>>,
    gens: Option<Vec<String>>,
    components: Option<Vec<ComponentDoc>>,
    family: Option<FamilyDoc>,
}

/// What the user asked to compute on.
pub enum Source {
    /// Generators of a single ideal.
    Ideal(MonomialIdeal),
    /// A primary decomposition; powers are symbolic powers.
    Decomposition(Decomposition),
}

impl Source {
    pub fn ring(&self) -> &Ring {
        match self {
            Source::Ideal(i) => i.ring(),
            Source::Decomposition(d) => d.ring(),
        }
    }

    /// A decomposition whose `t`-th power gives the symbolic powers. Plain
    /// ideals qualify when squarefree, through their minimal primes.
    pub fn decomposition(&self) -> CliResult<Decomposition> {
        match self {
            Source::Decomposition(d) => Ok(d.clone()),
            Source::Ideal(i) => Ok(i.minimal_primes_squarefree()?),
        }
    }
}

fn gens_source(vars: Option<Vec<String>>, gens: &[String]) -> CliResult<Source> {
    let parsed = gens
        .iter()
        .map(|g| parse_monomial(g, 0))
        .collect::<CliResult<Vec<_>>>()?;
    let vars = vars.unwrap_or_else(|| infer_vars(&parsed));
    let ring = ring_from(&vars)?;
    Ok(Source::Ideal(ideal_from(&ring, &parsed)?))
}

pub fn from_document(text: &str) -> CliResult<Source> {
    let doc: IdealDocument =
        serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid ideal document: {e}")))?;
    match (doc.gens, doc.components, doc.family) {
        (Some(gens), None, None) => gens_source(doc.vars, &gens),
        (None, Some(components), None) => {
            let vars = doc.vars.ok_or_else(|| CliError::input("a components document needs vars"))?;
            let ring = ring_from(&vars)?;
            let comps = components
                .iter()
                .map(|c| {
                    let mut support = VarSet::default();
                    for name in &c.support {
                        let i = ring
                            .index_of(name)
                            .ok_or_else(|| CliError::input(format!("unknown variable {name:?}")))?;
                        support.insert(i);
                    }
                    let gens = c.gens.iter().map(|g| parse_monomial(g, 0)).collect::<CliResult<Vec<_>>>()?;
                    Ok(PrimaryComponent::new(support, ideal_from(&ring, &gens)?)?)
                })
                .collect::<CliResult<Vec<_>>>()?;
            Ok(Source::Decomposition(Decomposition::new(&ring, comps)?))
        }
        (None, None, Some(fam)) => Ok(Source::Decomposition(family(&fam.name, &fam.params)?)),
        _ => Err(CliError::input("an ideal document needs exactly one of gens, components or family")),
    }
}

/// Resolves the mutually exclusive input flags.
pub fn resolve(
    gens: Option<&str>,
    vars: Option<&str>,
    input: Option<&std::path::Path>,
    family_name: Option<&str>,
    params: &FamilyParams,
) -> CliResult<Source> {
    match (gens, input, family_name) {
        (Some(gens), None, None) => {
            let parsed = parse_generator_list(gens)?;
            let names = match vars {
                Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
                None => infer_vars(&parsed),
            };
            let ring = ring_from(&names)?;
            Ok(Source::Ideal(ideal_from(&ring, &parsed)?))
        }
        (None, Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            from_document(&text)
        }
        (None, None, Some(name)) => Ok(Source::Decomposition(family(name, params)?)),
        _ => Err(CliError::input("give exactly one of --gens, --input or --family")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_grammar() {
        assert_eq!(parse_monomial(" x^2 * y ", 0).unwrap(), vec![("x".into(), 2), ("y".into(), 1)]);
        assert_eq!(parse_monomial("1", 0).unwrap(), vec![]);
        let e = parse_monomial("x^*y", 0).unwrap_err();
        assert_eq!(e.code, 2);
        assert!(e.message.contains("column 3"), "{}", e.message);
        let e = parse_generator_list("x*y,z+1").unwrap_err();
        assert!(e.message.contains("column 6"), "{}", e.message);
    }

    #[test]
    fn documents() {
        let s = from_document(r#"{"vars":["x","y"],"gens":["x*y"]}"#).unwrap();
        assert_eq!(s.ring().n(), 2);
        let s = from_document(
            r#"{"vars":["x","y","z"],"components":[{"support":["x","y"],"gens":["x^2","y"]},{"support":["z"],"gens":["z"]}]}"#,
        )
        .unwrap();
        assert!(matches!(s, Source::Decomposition(_)));
        let s = from_document(r#"{"family":{"name":"typeA","params":{"m":2}}}"#).unwrap();
        assert_eq!(s.ring().n(), 5);
        assert_eq!(from_document(r#"{"vars":["x"]}"#).err().unwrap().code, 2);
        assert_eq!(from_document("{").err().unwrap().code, 2);
    }
}
