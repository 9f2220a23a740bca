//! Named identity sets and operations, a text format for varieties, and
//! checks of identities in free structures and concrete instances.

pub mod builtin;
pub mod instance;

use std::collections::BTreeMap;

use crate::basis::TreeBasis;
use crate::engine::{consequences_to_degree, identities_modulo, permuted_vectors, ModuleAction};
use crate::error::{Error, Result};
use crate::expansion::{
    DiOpTemplate, Expander, GroupAlgebraOp, NonassocExpander, NonassocOpTemplate,
};
use crate::field::Field;
use crate::parse::{check_multilinear, parse_identity};
use crate::term::{OpSig, Signature, TermPoly};

pub use builtin::{builtin, builtin_operations, Operations, BUILTIN_NAMES, BUILTIN_OPERATIONS};

/// A signature and its named defining identities.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietySpec {
    pub name: String,
    pub signature: Signature,
    pub identities: Vec<(String, TermPoly)>,
}

impl VarietySpec {
    /// Reads the line format
    ///
    /// ```text
    /// variety jtd
    /// operation op1 3
    /// operation op2 3
    /// symmetry op2 1 3
    /// identity J1: op2(a,b,c) - op2(c,b,a)
    /// ```
    ///
    /// `operation op1 2 product` declares a binary product written by
    /// juxtaposition. Lines starting with `#` are comments.
    pub fn parse(src: &str) -> Result<Self> {
        let mut name = None;
        let mut ops: Vec<OpSig> = Vec::new();
        let mut pending: Vec<(usize, String, String)> = Vec::new();
        let mut offset = 0;
        for line in src.lines() {
            let start = offset;
            offset += line.len() + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::Parse {
                offset: start,
                message: m.to_string(),
            };
            let (key, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected a keyword and a value"))?;
            let rest = rest.trim();
            match key {
                "variety" => name = Some(rest.to_string()),
                "operation" => {
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    let k = op_number(words.first().copied().unwrap_or(""))
                        .ok_or_else(|| err("expected opK"))?;
                    if k != ops.len() + 1 {
                        return Err(err("operations must be declared in order op1, op2, .."));
                    }
                    let arity = words
                        .get(1)
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| err("expected an arity"))?;
                    let juxtaposition = match words.get(2) {
                        None => false,
                        Some(&"product") if arity == 2 => true,
                        Some(_) => return Err(err("unexpected operation flag")),
                    };
                    ops.push(OpSig {
                        arity,
                        symmetries: Vec::new(),
                        juxtaposition,
                    });
                }
                "symmetry" => {
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    let k = words
                        .first()
                        .and_then(|w| op_number(w))
                        .ok_or_else(|| err("expected opK"))?;
                    let pos: Vec<usize> =
                        words[1..].iter().filter_map(|w| w.parse().ok()).collect();
                    let op = ops
                        .get_mut(k.wrapping_sub(1))
                        .ok_or(Error::UnboundOperation(k))?;
                    match pos[..] {
                        [i, j] if i >= 1 && j >= 1 && i <= op.arity && j <= op.arity && i != j => {
                            op.symmetries.push((i - 1, j - 1))
                        }
                        _ => return Err(err("expected two distinct argument positions")),
                    }
                }
                "identity" => {
                    let (label, body) = rest
                        .split_once(':')
                        .ok_or_else(|| err("expected 'identity NAME: ...'"))?;
                    pending.push((start, label.trim().to_string(), body.trim().to_string()));
                }
                _ => return Err(err("unknown keyword")),
            }
        }
        let signature = Signature { ops };
        let identities = pending
            .into_iter()
            .map(|(_, label, body)| Ok((label, parse_identity(&body, &signature)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(VarietySpec {
            name: name.ok_or(Error::Malformed("missing 'variety' line".into()))?,
            signature,
            identities,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("variety {}\n", self.name);
        for (k, op) in self.signature.ops.iter().enumerate() {
            s.push_str(&format!(
                "operation op{} {}{}\n",
                k + 1,
                op.arity,
                if op.juxtaposition { " product" } else { "" }
            ));
        }
        for (k, op) in self.signature.ops.iter().enumerate() {
            for (i, j) in &op.symmetries {
                s.push_str(&format!("symmetry op{} {} {}\n", k + 1, i + 1, j + 1));
            }
        }
        for (label, id) in &self.identities {
            s.push_str(&format!(
                "identity {label}: {}\n",
                self.signature.format_poly(id)
            ));
        }
        s
    }

    pub fn polys(&self) -> Vec<TermPoly> {
        self.identities.iter().map(|(_, p)| p.clone()).collect()
    }
}

/// Operations read from the line format
///
/// ```text
/// di op1 = ^abc + cb^a
/// di op2 = a^bc + c^ba
/// sym op2 1 3
/// ```
///
/// with `assoc` for words in an associative algebra and `nonassoc` for
/// polynomials in one binary product. All operations share one kind; the
/// `sym` lines declare symmetries of the operations as sources of
/// monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct OpsSpec {
    pub names: Vec<String>,
    pub ops: Operations,
    pub signature: Signature,
}

impl OpsSpec {
    pub fn parse(src: &str) -> Result<Self> {
        let mut kind: Option<&str> = None;
        let mut names: Vec<String> = Vec::new();
        let mut bodies: Vec<String> = Vec::new();
        let mut syms: Vec<(usize, usize, usize)> = Vec::new();
        let mut offset = 0;
        for line in src.lines() {
            let start = offset;
            offset += line.len() + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::Parse {
                offset: start,
                message: m.to_string(),
            };
            let (key, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected a keyword"))?;
            match key {
                "di" | "assoc" | "nonassoc" => {
                    if kind.is_some_and(|k| k != key) {
                        return Err(err("operations of different kinds"));
                    }
                    kind = Some(key);
                    let (name, body) = rest
                        .split_once('=')
                        .ok_or_else(|| err("expected 'NAME = TEMPLATE'"))?;
                    names.push(name.trim().to_string());
                    bodies.push(body.trim().to_string());
                }
                "sym" => {
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    let [name, i, j] = words[..] else {
                        return Err(err("expected 'sym NAME I J'"));
                    };
                    let op = names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| err("symmetry of an undeclared operation"))?;
                    let (i, j): (usize, usize) = match (i.parse(), j.parse()) {
                        (Ok(i), Ok(j)) if i >= 1 && j >= 1 && i != j => (i, j),
                        _ => return Err(err("expected two distinct argument positions")),
                    };
                    syms.push((op, i - 1, j - 1));
                }
                _ => return Err(err("unknown keyword")),
            }
        }
        let ops = match kind {
            Some("di") => Operations::Dialgebra(
                bodies
                    .iter()
                    .map(|b| DiOpTemplate::parse(b))
                    .collect::<Result<_>>()?,
            ),
            Some("assoc") => Operations::Associative(
                bodies
                    .iter()
                    .map(|b| GroupAlgebraOp::parse(b))
                    .collect::<Result<_>>()?,
            ),
            Some(_) => Operations::Nonassociative(
                bodies
                    .iter()
                    .map(|b| NonassocOpTemplate::parse(b))
                    .collect::<Result<_>>()?,
            ),
            None => return Err(Error::Malformed("no operations declared".into())),
        };
        let mut signature = Signature {
            ops: ops
                .arities()
                .into_iter()
                .map(|arity| OpSig {
                    arity,
                    symmetries: Vec::new(),
                    juxtaposition: false,
                })
                .collect(),
        };
        for (op, i, j) in syms {
            if i >= signature.ops[op].arity || j >= signature.ops[op].arity {
                return Err(Error::Malformed(format!(
                    "symmetry outside the arity of {}",
                    names[op]
                )));
            }
            signature.ops[op].symmetries.push((i, j));
        }
        Ok(OpsSpec {
            names,
            ops,
            signature,
        })
    }

    /// A named operation family with its default source signature.
    pub fn from_builtin(name: &str) -> Result<Self> {
        let ops = builtin_operations(name)?;
        let mut signature = Signature {
            ops: ops
                .arities()
                .into_iter()
                .map(|arity| OpSig {
                    arity,
                    symmetries: Vec::new(),
                    juxtaposition: false,
                })
                .collect(),
        };
        if name == "diproducts" {
            signature = builtin::symmetric_triple_signature();
        }
        let names = (1..=signature.op_count())
            .map(|k| format!("op{k}"))
            .collect();
        Ok(OpsSpec {
            names,
            ops,
            signature,
        })
    }

    pub fn to_text(&self) -> String {
        let (kind, bodies): (&str, Vec<String>) = match &self.ops {
            Operations::Dialgebra(v) => ("di", v.iter().map(ToString::to_string).collect()),
            Operations::Associative(v) => ("assoc", v.iter().map(ToString::to_string).collect()),
            Operations::Nonassociative(v) => {
                ("nonassoc", v.iter().map(ToString::to_string).collect())
            }
        };
        let mut s = String::new();
        for (name, body) in self.names.iter().zip(bodies) {
            s.push_str(&format!("{kind} {name} = {body}\n"));
        }
        for (name, op) in self.names.iter().zip(&self.signature.ops) {
            for (i, j) in &op.symmetries {
                s.push_str(&format!("sym {name} {} {}\n", i + 1, j + 1));
            }
        }
        s
    }
}

fn op_number(w: &str) -> Option<usize> {
    w.strip_prefix("op")?.parse().ok()
}

/// Whether each identity vanishes when its operations are expanded.
pub fn verify_on_free<F: Field, E: Expander>(
    field: &F,
    expander: &E,
    ids: &[TermPoly],
) -> Result<Vec<bool>> {
    ids.iter()
        .map(|id| {
            let d = check_multilinear(id, "identity")?;
            crate::engine::vanishes(field, d, expander, id)
        })
        .collect()
}

/// Whether each identity in operations defined through one binary product
/// holds in every algebra satisfying `variety` (identities of that
/// product): the identity must lie in the space returned by
/// `identities_modulo` for its degree.
pub fn verify_modulo<F: Field>(
    field: &F,
    variety: &[TermPoly],
    ops: &[NonassocOpTemplate],
    sig: &Signature,
    ids: &[TermPoly],
) -> Result<Vec<bool>> {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, id) in ids.iter().enumerate() {
        by_degree
            .entry(check_multilinear(id, "identity")?)
            .or_default()
            .push(i);
    }
    let mut out = vec![false; ids.len()];
    for (degree, members) in by_degree {
        let left = TreeBasis::full(&Signature::binary(), degree)?;
        let action = ModuleAction::new(&left)?;
        let lower: Vec<TermPoly> = variety
            .iter()
            .filter(|v| check_multilinear(v, "identity").is_ok_and(|d| d <= degree))
            .cloned()
            .collect();
        let cons = consequences_to_degree(&lower, &Signature::binary(), degree)?;
        let rows = permuted_vectors(field, &left, &action, &cons)?;
        let source = TreeBasis::full(sig, degree)?;
        let expander = NonassocExpander::new(ops.to_vec(), degree)?;
        let report = identities_modulo(field, &rows, &left, &source, &expander)?;
        for i in members {
            out[i] = report
                .identities
                .contains(&source.field_vector(field, &ids[i])?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        for name in BUILTIN_NAMES {
            let v = builtin(name).unwrap();
            let back = VarietySpec::parse(&v.to_text()).unwrap();
            assert_eq!(back, v, "{name}");
        }
        assert!(matches!(builtin("nope"), Err(Error::Unknown(_))));
    }

    #[test]
    fn parse_errors() {
        assert!(VarietySpec::parse("operation op1 3\n").is_err());
        assert!(VarietySpec::parse("variety x\noperation op2 3\n").is_err());
        assert!(VarietySpec::parse("variety x\noperation op1 3\nidentity A: op1(a,b)\n").is_err());
        assert!(VarietySpec::parse("variety x\noperation op1 3\nsymmetry op1 1 4\n").is_err());
        let v = VarietySpec::parse(
            "variety x\noperation op1 3\nsymmetry op1 1 3\nidentity S: op1(a,b,c) - op1(c,b,a)\n",
        )
        .unwrap();
        assert_eq!(v.signature.ops[0].symmetries, vec![(0, 2)]);
    }

    #[test]
    fn operations_files() {
        let spec =
            OpsSpec::parse("di op1 = ^abc + cb^a\ndi op2 = a^bc + c^ba\nsym op2 1 3\n").unwrap();
        assert_eq!(spec.signature, builtin::symmetric_triple_signature());
        assert_eq!(OpsSpec::parse(&spec.to_text()).unwrap(), spec);
        assert_eq!(spec, OpsSpec::from_builtin("diproducts").unwrap());
        let n = OpsSpec::parse("nonassoc t = (ab)c - (ac)b + a(bc)").unwrap();
        assert_eq!(n.ops.arities(), vec![3]);
        assert!(OpsSpec::parse("di x = ^ab\nassoc y = ab").is_err());
        assert!(OpsSpec::parse("assoc w = abc\nsym w 1 4").is_err());
        assert!(OpsSpec::parse("sym w 1 2").is_err());
        assert!(OpsSpec::parse("").is_err());
    }
}
