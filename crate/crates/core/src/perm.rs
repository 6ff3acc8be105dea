use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {1, ..., n} in one-line notation, n >= 1.
///
/// JSON encoding is the bare word, e.g. `[4,5,2,3,6,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a bijection on {1..n} with n >= 1.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word (n must be >= 1)".into()));
        }
        let mut seen_at = vec![None; n];
        for (i, &v) in word.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {} at position {} is out of range 1..={}",
                    v,
                    i + 1,
                    n
                )));
            }
            if let Some(first) = seen_at[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "duplicate value {} at position {} (first at position {})",
                    v,
                    i + 1,
                    first + 1
                )));
            }
            seen_at[v - 1] = Some(i);
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Permutation::new((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Number of positions m (1-based, m < n) with w_m > w_{m+1}.
    pub fn descent_count(&self) -> usize {
        self.word.windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// Position of value `v` (0-based).
    pub fn position_of(&self, v: usize) -> usize {
        self.word.iter().position(|&x| x == v).expect("value in 1..=n")
    }

    /// All of S_n in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next: Option<Vec<usize>> = if n == 0 { None } else { Some((1..=n).collect()) };
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            next = next_lex(&mut succ).then_some(succ);
            Some(Permutation { word: cur })
        })
    }

    /// The `rank`-th permutation of S_n in lexicographic order (0-based rank).
    ///
    /// Used to partition sweeps over S_n into independent chunks.
    pub fn unrank(n: usize, mut rank: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word (n must be >= 1)".into()));
        }
        let total = factorial(n);
        if rank >= total {
            return Err(Error::Domain(format!("rank {} out of range for S_{}", rank, n)));
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for i in (1..=n).rev() {
            let f = factorial(i - 1);
            let idx = (rank / f) as usize;
            rank %= f;
            word.push(pool.remove(idx));
        }
        Ok(Permutation { word })
    }
}

/// n! as u64; n <= 20.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn next_lex(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Contiguous digits for n <= 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts contiguous digit strings (`452361`, n <= 9) and
    /// comma-separated lists (`4,5,2,3,6,1`, any n).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPermutation("empty string".into()));
        }
        let word = if s.contains(',') {
            s.split(',')
                .enumerate()
                .map(|(i, tok)| {
                    tok.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!(
                            "cannot parse entry {:?} at position {}",
                            tok.trim(),
                            i + 1
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10).filter(|&d| d > 0).map(|d| d as usize).ok_or_else(|| {
                        Error::InvalidPermutation(format!(
                            "invalid character {:?} at position {}",
                            c,
                            i + 1
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}
