//! Identity sets and operations from the theory of Jordan triple disystems
//! and Jordan dialgebras.

use crate::error::{Error, Result};
use crate::expansion::{DiOpTemplate, GroupAlgebraOp, NonassocOpTemplate};
use crate::parse::{parse_identity, parse_identity_chain};
use crate::term::{Signature, Term, TermPoly};

use super::VarietySpec;

pub const LINEARIZED_JORDAN: &str =
    "{{{a,c},b},d} + {{{a,d},b},c} + {{{c,d},b},a} - {{a,c},{b,d}} - {{a,d},{b,c}} - {{c,d},{b,a}}";
pub const COMMUTATIVITY: &str = "{a,b} - {b,a}";

pub const JTS_SYMMETRY: &str = "{a,b,c} - {c,b,a}";
pub const JTS_DERIVATION: &str = "{a,b,{c,d,e}} - {{a,b,c},d,e} + {c,{b,a,d},e} - {c,d,{a,b,e}}";

pub const RIGHT_COMMUTATIVITY: &str = "a(bc) - a(cb)";
pub const OSBORN1: &str = "((ba)c)d + ((bd)c)a - (b(ac))d - (b(cd))a - (b(ad))c + b((ad)c)";
pub const RIGHT_JORDAN: &str = "(b(ac))d + (b(ad))c + (b(cd))a - (bd)(ac) - (bc)(ad) - (ba)(cd)";
pub const OSBORN2: &str = "((ac)b)d + ((ad)b)c - (ab)(cd) - (ac)(bd) - (ad)(bc) + a((cd)b)";

/// The two Jordan triple diproducts in an associative dialgebra.
pub const DIPRODUCT1: &str = "^abc + cb^a";
pub const DIPRODUCT2: &str = "a^bc + c^ba";

/// Trilinear operations in a Jordan dialgebra.
pub const JD_TRIPLE1: &str = "(ab)c - (ac)b + a(bc)";
pub const JD_TRIPLE2: &str = "(ba)c + (bc)a - b(ac)";

pub const JTD: [(&str, &str); 8] = [
    ("J1", "{a,b,c}_2 = {c,b,a}_2"),
    ("J2", "{a,{b,c,d}_1,e}_1 = {a,{b,c,d}_2,e}_1"),
    ("J3", "{a,b,{c,d,e}_1}_1 = {a,b,{c,d,e}_2}_1"),
    ("J4", "{{a,b,c}_1,d,e}_2 = {{a,b,c}_2,d,e}_2"),
    (
        "J5",
        "{{e,d,c}_1,b,a}_1 = {{e,b,a}_1,d,c}_1 - {e,{d,a,b}_1,c}_1 + {e,d,{c,b,a}_1}_1",
    ),
    (
        "J6",
        "{{e,d,c}_2,b,a}_1 = {{e,b,a}_1,d,c}_2 - {e,{d,a,b}_1,c}_2 + {e,d,{c,b,a}_1}_2",
    ),
    (
        "J7",
        "{a,b,{c,d,e}_1}_1 = {{a,b,c}_1,d,e}_1 - {c,{b,a,d}_2,e}_2 + {{a,b,e}_1,d,c}_1",
    ),
    (
        "J8",
        "{a,b,{c,d,e}_1}_2 = {{a,b,c}_2,d,e}_1 - {c,{b,a,d}_1,e}_2 + {{a,b,e}_2,d,c}_1",
    ),
];

/// The identities obtained from the Jordan triple system axioms by the KP
/// construction, chains included.
pub const JTD_KP: [(&str, &str); 8] = [
    ("K1", "{a,b,c}_2 = {c,b,a}_2"),
    (
        "K2",
        "{a,{b,c,d}_1,e}_1 = {a,{b,c,d}_2,e}_1 = {a,{d,c,b}_1,e}_1",
    ),
    (
        "K3",
        "{a,b,{c,d,e}_1}_1 = {a,b,{c,d,e}_2}_1 = {a,b,{e,d,c}_1}_1",
    ),
    (
        "K4",
        "{{a,b,c}_1,d,e}_2 = {{a,b,c}_2,d,e}_2 = {{c,b,a}_1,d,e}_2",
    ),
    (
        "K5",
        "{{e,d,c}_1,b,a}_1 = {{e,b,a}_1,d,c}_1 - {e,{d,a,b}_1,c}_1 + {e,d,{c,b,a}_1}_1",
    ),
    (
        "K6",
        "{{e,d,c}_2,b,a}_1 = {{e,b,a}_1,d,c}_2 - {e,{d,a,b}_1,c}_2 + {e,d,{c,b,a}_1}_2",
    ),
    (
        "K7",
        "{a,b,{c,d,e}_1}_1 = {{a,b,c}_1,d,e}_1 - {c,{b,a,d}_2,e}_2 + {{a,b,e}_1,d,c}_1",
    ),
    (
        "K8",
        "{a,b,{c,d,e}_1}_2 = {{a,b,c}_2,d,e}_1 - {c,{b,a,d}_1,e}_2 + {{a,b,e}_2,d,c}_1",
    ),
];

/// The identities of the Jordan triple diproducts found by the nullspace
/// method.
pub const JTD_BSO: [(&str, &str); 8] = [
    ("B1", "(a,b,c)_2 = (c,b,a)_2"),
    ("B2", "(a,(b,c,d)_1,e)_1 = (a,(b,c,d)_2,e)_1"),
    ("B3", "(a,b,(c,d,e)_1)_1 = (a,b,(c,d,e)_2)_1"),
    ("B4", "((a,b,c)_1,d,e)_2 = ((a,b,c)_2,d,e)_2"),
    (
        "B5",
        "((e,d,c)_1,b,a)_1 = ((e,b,a)_1,d,c)_1 - (e,(d,a,b)_1,c)_1 + (e,d,(c,b,a)_1)_1",
    ),
    (
        "B6",
        "((e,d,c)_2,b,a)_1 = ((e,b,a)_1,d,c)_2 - (e,(d,a,b)_1,c)_2 + (e,d,(c,b,a)_1)_2",
    ),
    (
        "B7",
        "((e,d,c)_1,b,a)_2 = ((e,b,a)_2,d,c)_1 - (e,(b,a,d)_1,c)_2 + ((c,b,a)_2,d,e)_1",
    ),
    (
        "B8",
        "(a,(b,c,d)_2,e)_2 = ((c,b,a)_1,d,e)_1 + ((c,d,a)_1,b,e)_1 - (c,(b,a,d)_1,e)_1",
    ),
];

/// Generators for the degree 5 identities of the first diproduct alone.
pub const DIPRODUCT1_DEG5: [(&str, &str); 3] = [
    ("P1", "(a,(b,c,d)_1,e)_1 = (a,(d,c,b)_1,e)_1"),
    ("P2", "(a,b,(c,d,e)_1)_1 = (a,b,(e,d,c)_1)_1"),
    (
        "P3",
        "((e,d,c)_1,b,a)_1 = ((e,b,a)_1,d,c)_1 - (e,(d,a,b)_1,c)_1 + (e,d,(c,b,a)_1)_1",
    ),
];

/// The derivation identity of the first diproduct in the form used as the
/// seed when both diproducts are present.
pub const DIPRODUCTS_SEED: &str =
    "((a,b,c)_1,d,e)_1 - ((a,d,e)_1,b,c)_1 + (a,(b,e,d)_1,c)_1 - (a,b,(c,d,e)_1)_1";

/// Further generators for both diproducts in degree 5.
pub const DIPRODUCTS_DEG5: [(&str, &str); 6] = [
    ("C1", "((c,b,a)_2,d,e)_2 - ((a,b,c)_1,d,e)_2"),
    ("C2", "(a,(b,c,d)_1,e)_1 - (a,(b,c,d)_2,e)_1"),
    (
        "C3",
        "((e,d,c)_2,b,a)_2 - ((a,b,e)_2,d,c)_1 - ((a,b,c)_2,d,e)_1 + (e,(b,a,d)_1,c)_2",
    ),
    (
        "C4",
        "((e,b,a)_2,d,c)_2 + ((c,b,a)_2,d,e)_2 - ((e,d,c)_2,b,a)_1 - (e,(d,a,b)_1,c)_2",
    ),
    (
        "C5",
        "((e,b,a)_1,d,c)_1 - ((e,d,c)_1,b,a)_1 - (e,(b,a,d)_1,c)_1 + (e,d,(a,b,c)_2)_1",
    ),
    (
        "C6",
        "((a,b,c)_1,d,e)_1 + ((a,d,c)_1,b,e)_1 - (a,(b,c,d)_1,e)_1 - (c,(b,a,d)_2,e)_2",
    ),
];

/// Degree 5 identities of the trilinear Jordan dialgebra operations.
pub const JD_TRIPLE_DEG5: [(&str, &str); 7] = [
    ("T1", "<a,<b,c,d>_1,e>_1 - <a,<d,c,b>_2,e>_1"),
    ("T2", "<a,b,<c,d,e>_1>_1 - <a,b,<e,d,c>_2>_1"),
    ("T3", "<<a,b,c>_1,d,e>_2 - <<c,b,a>_2,d,e>_2"),
    (
        "T4",
        "<<a,b,c>_2,d,e>_1 - <<e,d,a>_2,b,c>_2 + <a,<b,e,d>_1,c>_2 - <<e,d,c>_2,b,a>_2",
    ),
    (
        "T5",
        "<<a,b,c>_2,d,e>_1 - <a,<b,c,d>_1,e>_2 - <e,<b,a,d>_1,c>_2 + <<a,d,c>_2,b,e>_2",
    ),
    (
        "T6",
        "<<a,b,c>_1,d,e>_1 + <<a,b,e>_1,d,c>_1 - <a,b,<c,d,e>_2>_1 - <c,<d,a,b>_2,e>_2",
    ),
    (
        "T7",
        "<<a,b,c>_1,d,e>_1 + <<a,d,c>_1,b,e>_1 - <a,<b,c,d>_2,e>_1 - <e,<b,a,d>_2,c>_2",
    ),
];

/// Two trilinear operations, no symmetry.
pub fn triple_signature() -> Signature {
    Signature::uniform(2, 3)
}

/// Two trilinear operations, the second symmetric in its outer arguments.
pub fn symmetric_triple_signature() -> Signature {
    Signature::uniform(2, 3).with_symmetry(1, 0, 2)
}

fn named(list: &[(&str, &str)], sig: &Signature) -> Result<Vec<(String, TermPoly)>> {
    let mut out = Vec::new();
    for (name, src) in list {
        let ids = parse_identity_chain(src, sig)?;
        let many = ids.len() > 1;
        for (k, id) in ids.into_iter().enumerate() {
            let n = if many {
                format!("{name}.{}", k + 1)
            } else {
                name.to_string()
            };
            out.push((n, id));
        }
    }
    Ok(out)
}

/// Identities of a named set, in their printed form.
pub fn builtin(name: &str) -> Result<VarietySpec> {
    let one_binary = Signature::uniform(1, 2);
    let (sig, ids) = match name {
        "jordan-algebra-linearized" => (
            one_binary.clone(),
            named(
                &[
                    ("commutativity", COMMUTATIVITY),
                    ("jordan", LINEARIZED_JORDAN),
                ],
                &one_binary,
            )?,
        ),
        "jordan-dialgebra" => {
            let sig = Signature::binary();
            let ids = named(
                &[
                    ("right-commutativity", RIGHT_COMMUTATIVITY),
                    ("O1", OSBORN1),
                    ("RJ", RIGHT_JORDAN),
                ],
                &sig,
            )?;
            (sig, ids)
        }
        "jts" => {
            let sig = Signature::uniform(1, 3);
            let ids = named(
                &[("symmetry", JTS_SYMMETRY), ("derivation", JTS_DERIVATION)],
                &sig,
            )?;
            (sig, ids)
        }
        "jtd" => (triple_signature(), named(&JTD, &triple_signature())?),
        "jtd-kp" => (triple_signature(), named(&JTD_KP, &triple_signature())?),
        "jtd-bso" => (triple_signature(), named(&JTD_BSO, &triple_signature())?),
        "jd-triple-deg5" => (
            triple_signature(),
            named(&JD_TRIPLE_DEG5, &triple_signature())?,
        ),
        "diproduct1-deg5" => (
            triple_signature(),
            named(&DIPRODUCT1_DEG5, &triple_signature())?,
        ),
        "diproducts-deg5" => {
            let mut ids = named(&[("seed", DIPRODUCTS_SEED)], &triple_signature())?;
            ids.extend(named(&DIPRODUCTS_DEG5, &triple_signature())?);
            (triple_signature(), ids)
        }
        _ => return Err(Error::Unknown(name.to_string())),
    };
    Ok(VarietySpec {
        name: name.to_string(),
        signature: sig,
        identities: ids,
    })
}

pub const BUILTIN_NAMES: [&str; 9] = [
    "jordan-algebra-linearized",
    "jordan-dialgebra",
    "jts",
    "jtd",
    "jtd-kp",
    "jtd-bso",
    "jd-triple-deg5",
    "diproduct1-deg5",
    "diproducts-deg5",
];

/// Operations of a named family.
#[derive(Clone, Debug, PartialEq)]
pub enum Operations {
    Associative(Vec<GroupAlgebraOp>),
    Dialgebra(Vec<DiOpTemplate>),
    Nonassociative(Vec<NonassocOpTemplate>),
}

impl Operations {
    pub fn arities(&self) -> Vec<usize> {
        match self {
            Operations::Associative(v) => v.iter().map(|o| o.arity).collect(),
            Operations::Dialgebra(v) => v.iter().map(|o| o.arity).collect(),
            Operations::Nonassociative(v) => v.iter().map(|o| o.arity).collect(),
        }
    }
}

pub const BUILTIN_OPERATIONS: [&str; 4] = [
    "jordan-triple-product",
    "diproducts",
    "jordan-di-triple",
    "special-jordan-product",
];

pub fn builtin_operations(name: &str) -> Result<Operations> {
    Ok(match name {
        "jordan-triple-product" => {
            Operations::Associative(vec![GroupAlgebraOp::parse("abc + cba")?])
        }
        "diproducts" => Operations::Dialgebra(vec![
            DiOpTemplate::parse(DIPRODUCT1)?,
            DiOpTemplate::parse(DIPRODUCT2)?,
        ]),
        "jordan-di-triple" => Operations::Nonassociative(vec![
            NonassocOpTemplate::parse(JD_TRIPLE1)?,
            NonassocOpTemplate::parse(JD_TRIPLE2)?,
        ]),
        "special-jordan-product" => {
            Operations::Dialgebra(vec![DiOpTemplate::special_jordan_product()])
        }
        _ => return Err(Error::Unknown(name.to_string())),
    })
}

/// `template(x_1, .., x_n)` for an identity in the letters `a, b, ..`,
/// given as the new letters in order; `osborn1(&[2, 0, 1, 3])` is
/// `O1(c, a, b, d)`.
pub fn with_arguments(id: &TermPoly, letters: &[u8]) -> TermPoly {
    let args: Vec<TermPoly> = letters
        .iter()
        .map(|&v| TermPoly::monomial(Term::Var(v)))
        .collect();
    id.flat_map(|t| t.substitute(&args))
}

pub fn binary_identity(src: &str) -> TermPoly {
    parse_identity(src, &Signature::binary()).expect("valid builtin identity")
}
