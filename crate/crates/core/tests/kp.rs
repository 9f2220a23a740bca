use dialgebra::kp::{erase_subscripts, kp_part1, kp_part2, kp_reduce_opposite};
use dialgebra::parse::{parse_identity, parse_identity_chain};
use dialgebra::perm::Permutation;
use dialgebra::term::Signature;

const LINEAR_JORDAN: &str =
    "{{{a,c},b},d} + {{{a,d},b},c} + {{{c,d},b},a} - {{a,c},{b,d}} - {{a,d},{b,c}} - {{c,d},{b,a}}";

#[test]
fn jordan_algebra_part1() {
    let one = Signature::uniform(1, 2);
    let two = Signature::uniform(2, 2);
    let id = parse_identity(LINEAR_JORDAN, &one).unwrap();
    let out = kp_part1(&id, 2).unwrap();
    let printed = [
        "{{{a,c}_1,b}_1,d}_1 + {{{a,d}_1,b}_1,c}_1 + {{{c,d}_2,b}_2,a}_2 - {{a,c}_1,{b,d}_1}_1 - {{a,d}_1,{b,c}_1}_1 - {{c,d}_2,{b,a}_2}_2",
        "{{{a,c}_2,b}_2,d}_1 + {{{a,d}_2,b}_2,c}_1 + {{{c,d}_2,b}_2,a}_1 - {{a,c}_2,{b,d}_1}_2 - {{a,d}_2,{b,c}_1}_2 - {{c,d}_2,{b,a}_1}_2",
        "{{{a,c}_2,b}_1,d}_1 + {{{a,d}_2,b}_2,c}_2 + {{{c,d}_1,b}_1,a}_1 - {{a,c}_2,{b,d}_1}_1 - {{a,d}_2,{b,c}_2}_2 - {{c,d}_1,{b,a}_1}_1",
        "{{{a,c}_2,b}_2,d}_2 + {{{a,d}_2,b}_1,c}_1 + {{{c,d}_2,b}_1,a}_1 - {{a,c}_2,{b,d}_2}_2 - {{a,d}_2,{b,c}_1}_1 - {{c,d}_2,{b,a}_1}_1",
    ];
    assert_eq!(out.len(), 4);
    for (got, want) in out.iter().zip(printed) {
        assert_eq!(*got, parse_identity(want, &two).unwrap());
        assert_eq!(erase_subscripts(got), id);
    }

    let comm = parse_identity("{a,b} - {b,a}", &one).unwrap();
    let mut all = kp_part1(&comm, 2).unwrap();
    all.extend(out);
    let reduced =
        kp_reduce_opposite(&all, 1, &Permutation::from_images(vec![1, 0]).unwrap()).unwrap();
    let printed = [
        "{{{a,c}_1,b}_1,d}_1 + {{{a,d}_1,b}_1,c}_1 + {a,{b,{d,c}_1}_1}_1 - {{a,c}_1,{b,d}_1}_1 - {{a,d}_1,{b,c}_1}_1 - {{a,b}_1,{d,c}_1}_1",
        "{{b,{c,a}_1}_1,d}_1 + {{b,{d,a}_1}_1,c}_1 + {{b,{d,c}_1}_1,a}_1 - {{b,d}_1,{c,a}_1}_1 - {{b,c}_1,{d,a}_1}_1 - {{b,a}_1,{d,c}_1}_1",
        "{{{c,a}_1,b}_1,d}_1 + {c,{b,{d,a}_1}_1}_1 + {{{c,d}_1,b}_1,a}_1 - {{c,a}_1,{b,d}_1}_1 - {{c,b}_1,{d,a}_1}_1 - {{c,d}_1,{b,a}_1}_1",
        "{d,{b,{c,a}_1}_1}_1 + {{{d,a}_1,b}_1,c}_1 + {{{d,c}_1,b}_1,a}_1 - {{d,b}_1,{c,a}_1}_1 - {{d,a}_1,{b,c}_1}_1 - {{d,c}_1,{b,a}_1}_1",
    ];
    assert_eq!(reduced.len(), 4);
    for (got, want) in reduced.iter().zip(printed) {
        assert_eq!(*got, parse_identity(want, &one).unwrap());
    }
}

#[test]
fn triple_system_part1_and_reduction() {
    let one = Signature::uniform(1, 3);
    let three = Signature::uniform(3, 3);
    let sym = parse_identity("{a,b,c} - {c,b,a}", &one).unwrap();
    let sym_out = kp_part1(&sym, 3).unwrap();
    let printed = [
        "{a,b,c}_1 - {c,b,a}_3",
        "{a,b,c}_2 - {c,b,a}_2",
        "{a,b,c}_3 - {c,b,a}_1",
    ];
    for (got, want) in sym_out.iter().zip(printed) {
        assert_eq!(*got, parse_identity(want, &three).unwrap());
    }

    let id = parse_identity(
        "{a,b,{c,d,e}} - {{a,b,c},d,e} + {c,{b,a,d},e} - {c,d,{a,b,e}}",
        &one,
    )
    .unwrap();
    let out = kp_part1(&id, 3).unwrap();
    let printed = [
        "{a,b,{c,d,e}_1}_1 - {{a,b,c}_1,d,e}_1 + {c,{b,a,d}_2,e}_2 - {c,d,{a,b,e}_1}_3",
        "{a,b,{c,d,e}_1}_2 - {{a,b,c}_2,d,e}_1 + {c,{b,a,d}_1,e}_2 - {c,d,{a,b,e}_2}_3",
        "{a,b,{c,d,e}_1}_3 - {{a,b,c}_3,d,e}_1 + {c,{b,a,d}_1,e}_1 - {c,d,{a,b,e}_1}_1",
        "{a,b,{c,d,e}_2}_3 - {{a,b,c}_3,d,e}_2 + {c,{b,a,d}_3,e}_2 - {c,d,{a,b,e}_1}_2",
        "{a,b,{c,d,e}_3}_3 - {{a,b,c}_3,d,e}_3 + {c,{b,a,d}_3,e}_3 - {c,d,{a,b,e}_3}_3",
    ];
    for (got, want) in out.iter().zip(printed) {
        assert_eq!(*got, parse_identity(want, &three).unwrap());
    }

    let mut all = sym_out;
    all.extend(out);
    let rev = Permutation::from_images(vec![2, 1, 0]).unwrap();
    let reduced = kp_reduce_opposite(&all, 2, &rev).unwrap();
    let two = Signature::uniform(2, 3);
    assert_eq!(
        reduced[0],
        parse_identity("{a,b,c}_2 - {c,b,a}_2", &two).unwrap()
    );
    let printed = [
        "{a,b,{c,d,e}_1}_1 - {{a,b,c}_1,d,e}_1 + {c,{b,a,d}_2,e}_2 - {{a,b,e}_1,d,c}_1",
        "{a,b,{c,d,e}_1}_2 - {{a,b,c}_2,d,e}_1 + {c,{b,a,d}_1,e}_2 - {{a,b,e}_2,d,c}_1",
        "{{c,d,e}_1,b,a}_1 - {{c,b,a}_1,d,e}_1 + {c,{b,a,d}_1,e}_1 - {c,d,{a,b,e}_1}_1",
        "{{c,d,e}_2,b,a}_1 - {{c,b,a}_1,d,e}_2 + {c,{d,a,b}_1,e}_2 - {c,d,{a,b,e}_1}_2",
        "{{e,d,c}_1,b,a}_1 - {e,d,{c,b,a}_1}_1 + {e,{d,a,b}_1,c}_1 - {{e,b,a}_1,d,c}_1",
    ];
    // Both first/third opposite pairs collapse to zero and drop out.
    assert_eq!(reduced.len(), 6);
    for (got, want) in reduced[1..].iter().zip(printed) {
        assert_eq!(*got, parse_identity(want, &two).unwrap());
    }
}

#[test]
fn triple_system_part2() {
    let three = Signature::uniform(3, 3);
    let printed = [
        "{a,{b,c,d}_1,e}_1 = {a,{b,c,d}_2,e}_1 = {a,{b,c,d}_3,e}_1",
        "{a,b,{c,d,e}_1}_1 = {a,b,{c,d,e}_2}_1 = {a,b,{c,d,e}_3}_1",
        "{{a,b,c}_1,d,e}_2 = {{a,b,c}_2,d,e}_2 = {{a,b,c}_3,d,e}_2",
        "{a,b,{c,d,e}_1}_2 = {a,b,{c,d,e}_2}_2 = {a,b,{c,d,e}_3}_2",
        "{{a,b,c}_1,d,e}_3 = {{a,b,c}_2,d,e}_3 = {{a,b,c}_3,d,e}_3",
        "{a,{b,c,d}_1,e}_3 = {a,{b,c,d}_2,e}_3 = {a,{b,c,d}_3,e}_3",
    ];
    let expected: Vec<_> = printed
        .iter()
        .flat_map(|s| parse_identity_chain(s, &three).unwrap())
        .collect();
    assert_eq!(kp_part2(3), expected);

    let rev = Permutation::from_images(vec![2, 1, 0]).unwrap();
    let mut ids = vec![parse_identity("{a,b,c}_3 - {c,b,a}_1", &three).unwrap()];
    ids.extend(kp_part2(3));
    let reduced = kp_reduce_opposite(&ids, 2, &rev).unwrap();
    let two = Signature::uniform(2, 3);
    let bar12 = parse_identity_chain(
        "{a,{b,c,d}_1,e}_1 = {a,{b,c,d}_2,e}_1 = {a,{d,c,b}_1,e}_1",
        &two,
    )
    .unwrap();
    assert_eq!(reduced[..2], bar12[..]);
}
