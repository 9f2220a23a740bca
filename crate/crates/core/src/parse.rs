//! Text syntax for identities in nonassociative operations.
//!
//! Accepted forms: `opK(x,y,z)`, `(x,y,z)_K`, `{x,y,z}_K`, `<x,y,z>_K` or
//! `⟨x,y,z⟩_K` for operation `K` (subscript optional, default 1), and
//! juxtaposition of exactly two factors such as `(ab)c` for the binary
//! product. Terms carry optional integer or rational coefficients; `=` or
//! `≡` separates two sides and the identity is `lhs - rhs`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::term::{Signature, Term, TermPoly};

/// Parses an identity and checks it against the signature; every monomial
/// must be multilinear in the first `d` letters for a common degree `d`.
pub fn parse_identity(src: &str, sig: &Signature) -> Result<TermPoly> {
    let p = parse_poly(src, sig)?;
    check_multilinear(&p, src)?;
    Ok(p)
}

/// Parses a chain `x ≡ y ≡ z` into the identities `x - y`, `y - z`. A
/// single expression yields itself.
pub fn parse_identity_chain(src: &str, sig: &Signature) -> Result<Vec<TermPoly>> {
    let parts: Vec<&str> = src.split(['=', '≡']).collect();
    if parts.len() == 1 {
        return Ok(vec![parse_identity(src, sig)?]);
    }
    let polys = parts
        .iter()
        .map(|p| parse_poly(p, sig))
        .collect::<Result<Vec<_>>>()?;
    polys
        .windows(2)
        .map(|w| {
            let mut d = w[0].clone();
            d.sub(&w[1]);
            check_multilinear(&d, src)?;
            Ok(d)
        })
        .collect()
}

/// Parses without the multilinearity check.
pub fn parse_poly(src: &str, sig: &Signature) -> Result<TermPoly> {
    let mut p = Parser {
        chars: src.char_indices().collect(),
        pos: 0,
        len: src.len(),
        sig,
    };
    let lhs = p.expr()?;
    p.skip_ws();
    let out = match p.peek() {
        Some('=') | Some('≡') => {
            p.pos += 1;
            let rhs = p.expr()?;
            let mut out = lhs;
            out.sub(&rhs);
            out
        }
        _ => lhs,
    };
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    for t in out.monomials() {
        t.check(sig)?;
    }
    Ok(out)
}

/// Degree shared by all monomials, verifying each uses `a..` exactly once.
pub fn check_multilinear(p: &TermPoly, src: &str) -> Result<usize> {
    let mut degree = None;
    for t in p.monomials() {
        if !t.is_multilinear() {
            return Err(Error::NotMultilinear(format!("{t} in {src:?}")));
        }
        match degree {
            None => degree = Some(t.degree()),
            Some(d) if d != t.degree() => {
                return Err(Error::NotMultilinear(format!("mixed degrees in {src:?}")));
            }
            _ => {}
        }
    }
    Ok(degree.unwrap_or(0))
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let offset = self.chars.get(self.pos).map_or(self.len, |c| c.0);
        Error::Parse {
            offset,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<TermPoly> {
        let mut out = TermPoly::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    Coeff::one()
                }
                Some('-') | Some('−') => {
                    self.pos += 1;
                    -Coeff::one()
                }
                _ if first => Coeff::one(),
                _ => break,
            };
            first = false;
            self.skip_ws();
            let coeff = self.coefficient()?;
            let mono = self.monomial()?;
            out.add_term(mono, sign * coeff);
        }
        Ok(out)
    }

    fn number(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().ok()
    }

    fn coefficient(&mut self) -> Result<Coeff> {
        let Some(num) = self.number() else {
            return Ok(Coeff::one());
        };
        let mut c = Coeff::from_integer(num);
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self
                .number()
                .ok_or_else(|| self.err("expected denominator"))?;
            if den == 0 {
                return Err(self.err("zero denominator"));
            }
            c = Coeff::new(num, den);
        }
        self.skip_ws();
        if self.peek() == Some('*') {
            self.pos += 1;
        }
        Ok(c)
    }

    fn binary_op(&self) -> usize {
        self.sig
            .ops
            .iter()
            .position(|o| o.juxtaposition)
            .unwrap_or(0)
    }

    fn monomial(&mut self) -> Result<Term> {
        let mut atoms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_lowercase() || "({<⟨".contains(c) => {
                    atoms.push(self.atom()?)
                }
                _ => break,
            }
        }
        match atoms.len() {
            0 => Err(self.err("expected a monomial")),
            1 => Ok(atoms.pop().unwrap()),
            2 => Ok(Term::Op(self.binary_op(), atoms)),
            _ => Err(self.err("ambiguous product: parenthesize")),
        }
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        if c == 'o' && self.chars.get(self.pos + 1).map(|c| c.1) == Some('p') {
            self.pos += 2;
            let k = self
                .number()
                .ok_or_else(|| self.err("expected operation number"))?;
            self.expect('(')?;
            let args = self.args(')')?;
            return self.make_op(k, args);
        }
        if c.is_ascii_lowercase() {
            self.pos += 1;
            return Ok(Term::Var(c as u8 - b'a'));
        }
        let close = match c {
            '(' => ')',
            '{' => '}',
            '<' => '>',
            '⟨' => '⟩',
            _ => return Err(self.err("unexpected character")),
        };
        self.pos += 1;
        let mut args = self.args(close)?;
        let sub = self.subscript()?;
        if args.len() == 1 && sub.is_none() && c == '(' {
            return Ok(args.pop().unwrap());
        }
        self.make_op(sub.unwrap_or(1), args)
    }

    fn args(&mut self, close: char) -> Result<Vec<Term>> {
        let mut args = vec![self.monomial()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    args.push(self.monomial()?);
                }
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(args);
                }
                _ => return Err(self.err(&format!("expected ',' or {close:?}"))),
            }
        }
    }

    fn subscript(&mut self) -> Result<Option<i64>> {
        if self.peek() != Some('_') {
            return Ok(None);
        }
        self.pos += 1;
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let k = self
            .number()
            .ok_or_else(|| self.err("expected subscript"))?;
        if braced {
            self.expect('}')?;
        }
        Ok(Some(k))
    }

    fn make_op(&self, k: i64, args: Vec<Term>) -> Result<Term> {
        if k < 1 || k as usize > self.sig.op_count() {
            return Err(Error::UnboundOperation(k.max(0) as usize));
        }
        let idx = k as usize - 1;
        let arity = self.sig.arity(idx);
        if args.len() != arity {
            return Err(Error::ArityMismatch {
                op: k as usize,
                expected: arity,
                found: args.len(),
            });
        }
        Ok(Term::Op(idx, args))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_juxtaposition() {
        let sig = Signature::binary();
        let p = parse_identity("(ab)c - (ac)b + a(bc)", &sig).unwrap();
        assert_eq!(sig.format_poly(&p), "(ab)c - (ac)b + a(bc)");
    }

    #[test]
    fn equations_and_coefficients() {
        let sig = Signature::binary();
        let p = parse_identity("2(ab)c = 1/2 a(bc)", &sig).unwrap();
        assert_eq!(
            p.coeff(
                &parse_poly("(ab)c", &sig)
                    .unwrap()
                    .monomials()
                    .next()
                    .unwrap()
                    .clone()
            ),
            Coeff::from_integer(2)
        );
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn triple_notations_agree() {
        let sig = Signature::uniform(2, 3);
        let x = parse_identity("((a,b,c)_1,d,e)_2", &sig).unwrap();
        let y = parse_identity("op2(op1(a,b,c),d,e)", &sig).unwrap();
        let z = parse_identity("⟨⟨a,b,c⟩_1,d,e⟩_2", &sig).unwrap();
        let w = parse_identity("{{a,b,c}_1,d,e}_{2}", &sig).unwrap();
        assert_eq!(x, y);
        assert_eq!(x, z);
        assert_eq!(x, w);
    }

    #[test]
    fn chains() {
        let sig = Signature::uniform(2, 3);
        let ids = parse_identity_chain(
            "(a,(b,c,d)_1,e)_1 ≡ (a,(b,c,d)_2,e)_1 ≡ (a,(d,c,b)_1,e)_1",
            &sig,
        )
        .unwrap();
        assert_eq!(ids.len(), 2);
        assert_eq!(ids[0].len(), 2);
    }

    #[test]
    fn rejections() {
        let sig = Signature::uniform(2, 3);
        assert!(matches!(
            parse_identity("(a,b)_1", &sig),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            parse_identity("(a,b,c)_3", &sig),
            Err(Error::UnboundOperation(3))
        ));
        assert!(matches!(
            parse_identity("(a,b,a)_1", &sig),
            Err(Error::NotMultilinear(_))
        ));
        assert!(matches!(
            parse_identity("(a,b,d)_1", &sig),
            Err(Error::NotMultilinear(_))
        ));
        assert!(parse_identity("(a,b,c)_1 +", &sig).is_err());
        assert!(parse_identity("abc", &Signature::binary()).is_err());
    }
}
