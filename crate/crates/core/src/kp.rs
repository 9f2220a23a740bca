//! The Kolesnikov–Pozhidaev construction: identities for one `n`-ary
//! operation become identities for `n` new `n`-ary operations.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::term::{Term, TermPoly};

fn single_operation_arity(id: &TermPoly) -> Result<Option<usize>> {
    fn walk(t: &Term, arity: &mut Option<usize>) -> Result<()> {
        match t {
            Term::Var(_) => Ok(()),
            Term::Op(k, ch) => {
                if *k != 0 {
                    return Err(Error::Malformed(format!(
                        "operation {} in a one-operation identity",
                        k + 1
                    )));
                }
                if *arity.get_or_insert(ch.len()) != ch.len() {
                    return Err(Error::Malformed(
                        "operation used with different arities".into(),
                    ));
                }
                ch.iter().try_for_each(|c| walk(c, arity))
            }
        }
    }
    let mut arity = None;
    for t in id.monomials() {
        walk(t, &mut arity)?;
    }
    Ok(arity)
}

/// Rewrites one monomial with central variable `v` whose leaf position is
/// `pos`; `start` is the leaf position where `t` begins.
fn rewrite(t: &Term, pos: usize, start: usize, n: usize) -> Term {
    match t {
        Term::Var(x) => Term::Var(*x),
        Term::Op(_, ch) => {
            let len = t.degree();
            let mut offset = start;
            let mut new_children = Vec::with_capacity(ch.len());
            let mut label = if pos < start { 0 } else { n - 1 };
            for (j, c) in ch.iter().enumerate() {
                let d = c.degree();
                if (offset..offset + d).contains(&pos) {
                    label = j;
                }
                new_children.push(rewrite(c, pos, offset, n));
                offset += d;
            }
            debug_assert_eq!(offset, start + len);
            Term::Op(label, new_children)
        }
    }
}

/// Part 1: one identity per choice of central argument, in variable order.
/// Operation `j` of the result (zero based) is the `(j+1)`-th new operation.
pub fn kp_part1(id: &TermPoly, n: usize) -> Result<Vec<TermPoly>> {
    let Some(arity) = single_operation_arity(id)? else {
        return Ok(Vec::new());
    };
    if arity != n {
        return Err(Error::ArityMismatch {
            op: 1,
            expected: n,
            found: arity,
        });
    }
    let degree = crate::parse::check_multilinear(id, "identity")?;
    Ok((0..degree as u8)
        .map(|v| {
            id.map_monomials(|t| {
                let pos = t
                    .leaves()
                    .iter()
                    .position(|&x| x == v)
                    .expect("multilinear");
                rewrite(t, pos, 0, n)
            })
        })
        .collect())
}

/// Part 2 in degree `2n - 1`: for every outer operation `j` and argument
/// position `i != j`, inner operations `k` and `k + 1` are interchangeable
/// in that position. Ordered by `j`, then `i`, then `k`.
pub fn kp_part2(n: usize) -> Vec<TermPoly> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for j in 0..n {
        for i in (0..n).filter(|&i| i != j) {
            for k in 0..n - 1 {
                let build = |inner_op: usize| {
                    let mut next = 0u8;
                    let mut args = Vec::with_capacity(n);
                    for slot in 0..n {
                        if slot == i {
                            let inner = (0..n)
                                .map(|_| {
                                    next += 1;
                                    Term::Var(next - 1)
                                })
                                .collect();
                            args.push(Term::Op(inner_op, inner));
                        } else {
                            next += 1;
                            args.push(Term::Var(next - 1));
                        }
                    }
                    Term::Op(j, args)
                };
                let mut id = TermPoly::monomial(build(k));
                id.sub(&TermPoly::monomial(build(k + 1)));
                out.push(id);
            }
        }
    }
    out
}

/// For a two-term identity `op_k(w) - op_1(w')` returns `tau` with
/// `op_k(y) = op_1(y_tau(0), .., y_tau(n-1))`.
fn defining_relation(id: &TermPoly, k: usize) -> Option<Permutation> {
    if id.len() != 2 {
        return None;
    }
    let terms: Vec<(&Term, _)> = id.iter().collect();
    let flat = |t: &Term| match t {
        Term::Op(op, ch) if ch.iter().all(|c| matches!(c, Term::Var(_))) => Some((
            *op,
            ch.iter()
                .map(|c| if let Term::Var(v) = c { *v } else { 0 })
                .collect::<Vec<u8>>(),
        )),
        _ => None,
    };
    let (a, ca) = (flat(terms[0].0)?, *terms[0].1);
    let (b, cb) = (flat(terms[1].0)?, *terms[1].1);
    if ca != -cb {
        return None;
    }
    let (w, w1) = match (a.0, b.0) {
        (x, 0) if x == k => (a.1, b.1),
        (0, x) if x == k => (b.1, a.1),
        _ => return None,
    };
    let tau: Vec<u8> = w1
        .iter()
        .map(|x| w.iter().position(|y| y == x).map(|p| p as u8))
        .collect::<Option<_>>()?;
    Permutation::from_images(tau).ok()
}

fn eliminate(t: &Term, k: usize, tau: &Permutation) -> Term {
    match t {
        Term::Var(v) => Term::Var(*v),
        Term::Op(op, ch) => {
            let ch: Vec<Term> = ch.iter().map(|c| eliminate(c, k, tau)).collect();
            if *op == k {
                Term::Op(0, (0..ch.len()).map(|s| ch[tau.apply(s)].clone()).collect())
            } else if *op > k {
                Term::Op(op - 1, ch)
            } else {
                Term::Op(*op, ch)
            }
        }
    }
}

fn mentions(t: &Term, k: usize) -> bool {
    match t {
        Term::Var(_) => false,
        Term::Op(op, ch) => *op == k || ch.iter().any(|c| mentions(c, k)),
    }
}

/// Eliminates operation `k` (zero based) using a defining identity in `ids`
/// that expresses it as operation 1 with arguments permuted by `sigma`.
/// Operations above `k` shift down by one; identities that become zero are
/// dropped. A set that never mentions operation `k` is returned unchanged.
pub fn kp_reduce_opposite(
    ids: &[TermPoly],
    k: usize,
    sigma: &Permutation,
) -> Result<Vec<TermPoly>> {
    if !ids.iter().any(|p| p.monomials().any(|t| mentions(t, k))) {
        return Ok(ids.to_vec());
    }
    if k == 0
        || !ids
            .iter()
            .any(|id| defining_relation(id, k).as_ref() == Some(sigma))
    {
        return Err(Error::MissingDefiningIdentity(k + 1));
    }
    Ok(ids
        .iter()
        .map(|p| p.map_monomials(|t| eliminate(t, k, sigma)))
        .filter(|p| !p.is_zero())
        .collect())
}

/// Replaces every operation symbol by operation 1.
pub fn erase_subscripts(p: &TermPoly) -> TermPoly {
    fn erase(t: &Term) -> Term {
        match t {
            Term::Var(v) => Term::Var(*v),
            Term::Op(_, ch) => Term::Op(0, ch.iter().map(erase).collect()),
        }
    }
    p.map_monomials(erase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_identity, parse_identity_chain};
    use crate::term::Signature;

    #[test]
    fn associativity_gives_the_dialgebra_axioms() {
        let one = Signature::uniform(1, 2);
        let two = Signature::uniform(2, 2);
        let assoc = parse_identity("{{a,b},c} = {a,{b,c}}", &one).unwrap();
        let part1 = kp_part1(&assoc, 2).unwrap();
        let expected = [
            "{{a,b}_1,c}_1 = {a,{b,c}_1}_1",
            "{{a,b}_2,c}_1 = {a,{b,c}_1}_2",
            "{{a,b}_2,c}_2 = {a,{b,c}_2}_2",
        ];
        for (got, want) in part1.iter().zip(expected) {
            assert_eq!(*got, parse_identity(want, &two).unwrap());
        }
        let part2 = kp_part2(2);
        assert_eq!(
            part2[0],
            parse_identity("{a,{b,c}_1}_1 = {a,{b,c}_2}_1", &two).unwrap()
        );
        assert_eq!(
            part2[1],
            parse_identity("{{a,b}_1,c}_2 = {{a,b}_2,c}_2", &two).unwrap()
        );
        for p in &part1 {
            assert_eq!(erase_subscripts(p), assoc);
        }
    }

    #[test]
    fn part2_counts() {
        assert!(kp_part2(1).is_empty());
        assert_eq!(kp_part2(2).len(), 2);
        assert_eq!(kp_part2(3).len(), 12);
        let three = Signature::uniform(3, 3);
        let first = parse_identity_chain(
            "{a,{b,c,d}_1,e}_1 = {a,{b,c,d}_2,e}_1 = {a,{b,c,d}_3,e}_1",
            &three,
        )
        .unwrap();
        assert_eq!(kp_part2(3)[..2], first[..]);
    }

    #[test]
    fn commutativity_and_opposite_elimination() {
        let one = Signature::uniform(1, 2);
        let two = Signature::uniform(2, 2);
        let comm = parse_identity("{a,b} - {b,a}", &one).unwrap();
        let ids = kp_part1(&comm, 2).unwrap();
        assert_eq!(ids[0], parse_identity("{a,b}_1 - {b,a}_2", &two).unwrap());
        assert_eq!(ids[1], parse_identity("{a,b}_2 - {b,a}_1", &two).unwrap());
        let rev = Permutation::from_images(vec![1, 0]).unwrap();
        assert!(kp_reduce_opposite(&ids, 1, &rev).unwrap().is_empty());
        let id = Permutation::identity(2);
        assert!(matches!(
            kp_reduce_opposite(&ids, 1, &id),
            Err(Error::MissingDefiningIdentity(2))
        ));
        let untouched = vec![parse_identity("{a,b}_1 - {b,a}_1", &two).unwrap()];
        assert_eq!(kp_reduce_opposite(&untouched, 1, &rev).unwrap(), untouched);
    }

    #[test]
    fn rejects_several_operations() {
        let two = Signature::uniform(2, 2);
        let p = parse_identity("{a,b}_2 - {b,a}_1", &two).unwrap();
        assert!(kp_part1(&p, 2).is_err());
    }
}
