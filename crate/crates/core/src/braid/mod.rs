//! Permutations, reduced words and the operators `B^γ`.

mod theta;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use theta::{alpha_n, tensor_power_solution, theta_operator, word_operator, BraidRep};

/// An element of `Σ_n`, stored 0-based; the public interface is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 1-based images `γ(1), ..., γ(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The adjacent transposition `τ_i = (i, i+1)`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `γ(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DimMismatch(self.degree(), other.degree()));
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// `γ × δ ∈ Σ_{n+m}`: `γ` on the first `n` points, `δ` on the rest.
    pub fn block_sum(&self, other: &Self) -> Self {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|x| x + n));
        Self { images }
    }

    /// Number of pairs `i < j` with `γ(i) > γ(j)`.
    pub fn length(&self) -> usize {
        let p = &self.images;
        (0..p.len())
            .map(|i| p[i + 1..].iter().filter(|&&y| y < p[i]).count())
            .sum()
    }

    /// 1-based positions `i` with `γ(i) > γ(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `γ ∘ τ_i`.
    fn times_transposition(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Parses `"3,4,1,2"` (parentheses and spaces allowed).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Self::identity(0));
        }
        let images = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&images)
    }
}

/// A positive braid word `σ_{i_1} ⋯ σ_{i_l}` on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                max: n.saturating_sub(1),
            });
        }
        Ok(Self { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `τ_{i_1} ∘ ⋯ ∘ τ_{i_l}`.
    pub fn to_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &i in &self.letters {
            p = p.times_transposition(i);
        }
        p
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        if s.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", s.join(" "))
        }
    }
}

pub fn length(gamma: &Permutation) -> usize {
    gamma.length()
}

/// Bubble-sort word: strip the smallest descent from the right until the
/// identity is reached.
pub fn reduced_word(gamma: &Permutation) -> BraidWord {
    let mut p = gamma.clone();
    let mut stripped = Vec::with_capacity(p.length());
    while let Some(&i) = p.descents().first() {
        p = p.times_transposition(i);
        stripped.push(i);
    }
    stripped.reverse();
    BraidWord {
        n: gamma.degree(),
        letters: stripped,
    }
}

/// Every reduced word of `γ`.
pub fn all_reduced_words(gamma: &Permutation) -> BTreeSet<BraidWord> {
    fn go(p: &Permutation, out: &mut BTreeSet<Vec<usize>>) {
        if p.is_identity() {
            out.insert(Vec::new());
            return;
        }
        for i in p.descents() {
            let mut sub = BTreeSet::new();
            go(&p.times_transposition(i), &mut sub);
            for mut w in sub {
                w.push(i);
                out.insert(w);
            }
        }
    }
    let mut words = BTreeSet::new();
    go(gamma, &mut words);
    words
        .into_iter()
        .map(|letters| BraidWord {
            n: gamma.degree(),
            letters,
        })
        .collect()
}

/// `χ_{ij} ∈ Σ_{i+j}`: `k ↦ k + j` for `k <= i`, `k ↦ k - i` otherwise.
pub fn chi(i: usize, j: usize) -> Permutation {
    let images = (1..=i + j)
        .map(|k| if k <= i { k + j } else { k - i })
        .collect::<Vec<_>>();
    Permutation::new(&images).expect("block swap")
}

/// The permutation `(1_n × χ_{nn})(χ_{nn} × 1_n)(1_n × χ_{nn})` in `Σ_{3n}`.
pub fn hexagon_target(n: usize) -> Permutation {
    let c = chi(n, n);
    let left = Permutation::identity(n).block_sum(&c);
    let right = c.block_sum(&Permutation::identity(n));
    left.compose(&right)
        .and_then(|p| p.compose(&left))
        .expect("same degree")
}

/// All of `Σ_n` in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: cur.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
