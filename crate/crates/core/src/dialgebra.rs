//! Free associative dialgebra: monomial trees, their centers, and the hat
//! normal form basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{factorial, letter, rank_sequence, Permutation};
use crate::poly::MultiPoly;

/// A normal-form dialgebra monomial `a_1 ... ^a_i ... a_n`: the left-to-right
/// word together with the position of its center.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiMonomial {
    // field order gives the basis order: center position first, then word
    center: u8,
    word: Vec<u8>,
}

pub type DiPoly = MultiPoly<DiMonomial>;

impl DiMonomial {
    pub fn new(word: Vec<u8>, center: usize) -> Result<Self> {
        if center >= word.len() {
            return Err(Error::Malformed(format!(
                "center position {center} outside a word of length {}",
                word.len()
            )));
        }
        Ok(DiMonomial {
            center: center as u8,
            word,
        })
    }

    pub fn variable(v: u8) -> Self {
        DiMonomial {
            center: 0,
            word: vec![v],
        }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Zero-based position of the center in the word.
    pub fn center(&self) -> usize {
        self.center as usize
    }

    pub fn center_variable(&self) -> u8 {
        self.word[self.center as usize]
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Position in the basis ordered by center position, then
    /// lexicographically by word. Requires a multilinear word on `0..n`.
    pub fn index(&self) -> usize {
        self.center() * factorial(self.degree()) + rank_sequence(&self.word)
    }

    /// Relabels variables: `v -> sigma(v)`.
    pub fn act(&self, sigma: &Permutation) -> Self {
        DiMonomial {
            center: self.center,
            word: self
                .word
                .iter()
                .map(|&v| sigma.apply(v as usize) as u8)
                .collect(),
        }
    }

    /// Parses hat notation such as `c b ^a d e` or `cb^ade`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        let mut center = None;
        let mut hat_pending = false;
        for (off, ch) in s.char_indices() {
            match ch {
                ' ' | '\t' => {}
                '^' => {
                    if hat_pending || center.is_some() {
                        return Err(Error::Parse {
                            offset: off,
                            message: "second hat".into(),
                        });
                    }
                    hat_pending = true;
                }
                'a'..='z' => {
                    if hat_pending {
                        center = Some(word.len());
                        hat_pending = false;
                    }
                    word.push(ch as u8 - b'a');
                }
                _ => {
                    return Err(Error::Parse {
                        offset: off,
                        message: format!("unexpected character {ch:?}"),
                    })
                }
            }
        }
        let center = center.ok_or(Error::Parse {
            offset: s.len(),
            message: "missing hat".into(),
        })?;
        Self::new(word, center)
    }
}

impl fmt::Display for DiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if i == self.center() {
                f.write_str("^")?;
            }
            write!(f, "{}", letter(v))?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiMonomial({self})")
    }
}

/// All `n * n!` multilinear normal forms of degree `n`, in basis order.
pub fn enumerate_di_monomials(n: usize) -> Vec<DiMonomial> {
    let words = Permutation::all(n);
    (0..n)
        .flat_map(|c| {
            words.iter().map(move |w| DiMonomial {
                center: c as u8,
                word: w.images().to_vec(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiOp {
    /// `⊣`
    Left,
    /// `⊢`
    Right,
}

/// A dialgebra monomial with explicit parentheses and operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DiTree {
    Leaf(u8),
    Node(DiOp, Box<DiTree>, Box<DiTree>),
}

impl DiTree {
    pub fn leaf(v: u8) -> Self {
        DiTree::Leaf(v)
    }

    pub fn left(a: DiTree, b: DiTree) -> Self {
        DiTree::Node(DiOp::Left, Box::new(a), Box::new(b))
    }

    pub fn right(a: DiTree, b: DiTree) -> Self {
        DiTree::Node(DiOp::Right, Box::new(a), Box::new(b))
    }

    /// The center: descend left through `⊣` and right through `⊢`.
    pub fn center(&self) -> u8 {
        match self {
            DiTree::Leaf(v) => *v,
            DiTree::Node(DiOp::Left, a, _) => a.center(),
            DiTree::Node(DiOp::Right, _, b) => b.center(),
        }
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            DiTree::Leaf(v) => out.push(*v),
            DiTree::Node(_, a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Normal form: the leaf word with the center marked.
    pub fn normal_form(&self) -> DiMonomial {
        let word = self.leaves();
        let c = self.center();
        let center = word.iter().position(|&v| v == c).expect("center is a leaf");
        DiMonomial {
            center: center as u8,
            word,
        }
    }

    /// The canonical tree `(a_1 ⊢ .. ⊢ a_{i-1}) ⊢ a_i ⊣ (a_{i+1} ⊣ .. ⊣ a_n)`
    /// of a normal form.
    pub fn from_monomial(m: &DiMonomial) -> Self {
        let c = m.center();
        let mut t = DiTree::Leaf(m.word[c]);
        if c > 0 {
            let mut left = DiTree::Leaf(m.word[0]);
            for &v in &m.word[1..c] {
                left = DiTree::right(left, DiTree::Leaf(v));
            }
            t = DiTree::right(left, t);
        }
        if c + 1 < m.word.len() {
            let mut right = DiTree::Leaf(m.word[c + 1]);
            for &v in &m.word[c + 2..] {
                right = DiTree::left(right, DiTree::Leaf(v));
            }
            t = DiTree::left(t, right);
        }
        t
    }

    /// Every parenthesization and operation choice on the given word.
    pub fn all_on_word(word: &[u8]) -> Vec<DiTree> {
        if word.len() == 1 {
            return vec![DiTree::Leaf(word[0])];
        }
        let mut out = Vec::new();
        for split in 1..word.len() {
            let lefts = Self::all_on_word(&word[..split]);
            let rights = Self::all_on_word(&word[split..]);
            for l in &lefts {
                for r in &rights {
                    out.push(DiTree::left(l.clone(), r.clone()));
                    out.push(DiTree::right(l.clone(), r.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for DiTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiTree::Leaf(v) => write!(f, "{}", letter(*v)),
            DiTree::Node(op, a, b) => {
                let sym = match op {
                    DiOp::Left => "⊣",
                    DiOp::Right => "⊢",
                };
                write!(f, "({a} {sym} {b})")
            }
        }
    }
}
