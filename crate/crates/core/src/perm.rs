//! Permutations of `{0, .., n-1}` and their lexicographic enumeration.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from its image sequence `(σ(0), .., σ(n-1))`.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Malformed(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in composition"
        );
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Lexicographic index of the image sequence among all permutations of
    /// the same degree.
    pub fn rank(&self) -> usize {
        rank_sequence(&self.images)
    }

    pub fn unrank(n: usize, rank: usize) -> Self {
        Permutation {
            images: unrank_sequence(n, rank),
        }
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..factorial(n)).map(|r| Self::unrank(n, r)).collect()
    }

    pub fn letters(&self) -> String {
        self.images.iter().map(|&x| letter(x)).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.letters())
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Variable name for index `v` (`0 -> a`).
pub fn letter(v: u8) -> char {
    (b'a' + v) as char
}

/// Lexicographic rank of a sequence that is a permutation of `0..n`.
pub fn rank_sequence(seq: &[u8]) -> usize {
    let n = seq.len();
    let mut used = 0u64;
    let mut r = 0;
    for (i, &x) in seq.iter().enumerate() {
        let smaller_unused = (0..x).filter(|&y| used & (1 << y) == 0).count();
        r = r * (n - i) + smaller_unused;
        used |= 1 << x;
    }
    r
}

pub fn unrank_sequence(n: usize, mut rank: usize) -> Vec<u8> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut avail: Vec<u8> = (0..n as u8).collect();
    digits.into_iter().map(|d| avail.remove(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all = Permutation::all(3);
        let words: Vec<String> = all.iter().map(|p| p.letters()).collect();
        assert_eq!(words, ["abc", "acb", "bac", "bca", "cab", "cba"]);
        for (r, p) in all.iter().enumerate() {
            assert_eq!(p.rank(), r);
        }
    }

    #[test]
    fn group_laws() {
        let all = Permutation::all(4);
        for s in &all {
            assert!(s.compose(&s.inverse()).is_identity());
            for t in all.iter().step_by(5) {
                for u in all.iter().step_by(7) {
                    assert_eq!(s.compose(t).compose(u), s.compose(&t.compose(u)));
                }
            }
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }
}
