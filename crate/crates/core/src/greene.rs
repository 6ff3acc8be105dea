//! Classical and localized Greene statistics.
//!
//! The classical statistics incr_k / decr_k are computed two ways: from
//! prefix sums of the RS partition (fast), and by an RS-free oracle that
//! maximizes over position subsets using the Dilworth characterization
//! (a subsequence splits into k increasing pieces iff its longest strictly
//! decreasing subsequence has length at most k). The localized statistics
//! localincr_k / localdecr_k likewise have fast paths through the soliton
//! decomposition and exact definitional algorithms: a cut-point dynamic
//! program for localincr and exhaustive label assignments for localdecr.
//! Keeping both routes independent is what lets the verification suites
//! test the theorems instead of assuming them.

use serde::Serialize;

use crate::bbs::soliton_decomposition;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rs::insertion_tableau;

/// Subset oracles enumerate 2^n subsets; hard cap, no silent fallback.
pub const SUBSET_ORACLE_MAX_N: usize = 12;

/// Assignment oracle enumerates k^n labelings; hard cap, no silent fallback.
pub const ASSIGNMENT_BUDGET: u64 = 10_000_000;

/// The four length-n statistic sequences of a permutation. Each is weakly
/// increasing and saturates at n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreeneProfile {
    pub incr: Vec<usize>,
    pub decr: Vec<usize>,
    pub local_incr: Vec<usize>,
    pub local_decr: Vec<usize>,
}

/// Fast profile: incr/decr from prefix sums of sh P(w) and its conjugate,
/// local_incr/local_decr from prefix sums of sh SD(w) and its conjugate.
pub fn greene_profile(w: &Permutation) -> GreeneProfile {
    let n = w.n();
    let rs_shape = insertion_tableau(w).shape();
    let sd_shape = soliton_decomposition(w).shape();
    GreeneProfile {
        incr: rs_shape.prefix_sums(n),
        decr: rs_shape.conjugate().prefix_sums(n),
        local_incr: sd_shape.prefix_sums(n),
        local_decr: sd_shape.conjugate().prefix_sums(n),
    }
}

fn check_k(w: &Permutation, k: usize) -> Result<()> {
    if k < 1 || k > w.n() {
        return Err(Error::Domain(format!("k = {} out of range 1..={}", k, w.n())));
    }
    Ok(())
}

/// Length of a longest strictly increasing subsequence.
fn lis_len(values: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::with_capacity(values.len());
    for &v in values {
        let k = tails.partition_point(|&t| t < v);
        if k == tails.len() {
            tails.push(v);
        } else {
            tails[k] = v;
        }
    }
    tails.len()
}

/// Length of a longest strictly decreasing subsequence.
fn lds_len(values: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::with_capacity(values.len());
    for &v in values {
        let k = tails.partition_point(|&t| t > v);
        if k == tails.len() {
            tails.push(v);
        } else {
            tails[k] = v;
        }
    }
    tails.len()
}

/// All incr_k values at once, by brute force over position subsets.
/// Never consults RS insertion.
pub fn incr_profile_oracle(w: &Permutation) -> Result<Vec<usize>> {
    subset_profile(w, lds_len)
}

/// All decr_k values at once; dual of `incr_profile_oracle`.
pub fn decr_profile_oracle(w: &Permutation) -> Result<Vec<usize>> {
    subset_profile(w, lis_len)
}

fn subset_profile(w: &Permutation, width: fn(&[usize]) -> usize) -> Result<Vec<usize>> {
    let n = w.n();
    if n > SUBSET_ORACLE_MAX_N {
        return Err(Error::Capacity(format!(
            "subset oracle enumerates 2^n subsets; n = {} exceeds cap {}",
            n, SUBSET_ORACLE_MAX_N
        )));
    }
    // best[d] = largest subset whose chain-cover width is exactly d
    let mut best = vec![0usize; n + 1];
    let mut values = Vec::with_capacity(n);
    for mask in 0u64..(1 << n) {
        values.clear();
        for (i, &v) in w.word().iter().enumerate() {
            if mask >> i & 1 == 1 {
                values.push(v);
            }
        }
        let d = width(&values);
        if values.len() > best[d] {
            best[d] = values.len();
        }
    }
    let mut out = Vec::with_capacity(n);
    let mut acc = 0;
    for k in 1..=n {
        acc = acc.max(best[k]);
        out.push(acc);
    }
    Ok(out)
}

/// Maximum size of a k-increasing subsequence (Dilworth-characterized),
/// by brute force over position subsets.
pub fn incr_k_oracle(w: &Permutation, k: usize) -> Result<usize> {
    check_k(w, k)?;
    Ok(incr_profile_oracle(w)?[k - 1])
}

/// Maximum size of a k-decreasing subsequence, by brute force.
pub fn decr_k_oracle(w: &Permutation, k: usize) -> Result<usize> {
    check_k(w, k)?;
    Ok(decr_profile_oracle(w)?[k - 1])
}

/// Exact localincr_k: maximize the summed LIS over all ways to cut w into
/// k consecutive (possibly empty) blocks. Dynamic program over cut points.
pub fn local_incr_k(w: &Permutation, k: usize) -> Result<usize> {
    check_k(w, k)?;
    let n = w.n();
    let word = w.word();
    // lis[i][j] = LIS of w[i..j]
    let mut lis = vec![vec![0usize; n + 1]; n + 1];
    for i in 0..n {
        let mut tails: Vec<usize> = Vec::new();
        for j in i..n {
            let v = word[j];
            let t = tails.partition_point(|&x| x < v);
            if t == tails.len() {
                tails.push(v);
            } else {
                tails[t] = v;
            }
            lis[i][j + 1] = tails.len();
        }
    }
    let mut prev = vec![None::<usize>; n + 1];
    prev[0] = Some(0);
    for _ in 0..k {
        let mut cur = vec![None::<usize>; n + 1];
        for j in 0..=n {
            for i in 0..=j {
                if let Some(base) = prev[i] {
                    let cand = base + lis[i][j];
                    if cur[j].map_or(true, |c| cand > c) {
                        cur[j] = Some(cand);
                    }
                }
            }
        }
        prev = cur;
    }
    Ok(prev[n].expect("k blocks always cover the word"))
}

/// Fast localdecr_k: prefix sums of the conjugate BBS soliton partition.
pub fn local_decr_k(w: &Permutation, k: usize) -> Result<usize> {
    check_k(w, k)?;
    let conj = soliton_decomposition(w).shape().conjugate();
    Ok(conj.prefix_sums(w.n())[k - 1])
}

/// Exact localdecr_k by exhausting all k^n assignments of positions to k
/// (possibly empty) subsequences; each nonempty subsequence u contributes
/// 1 + |descents of u|. Errors when k^n exceeds `ASSIGNMENT_BUDGET`.
pub fn local_decr_k_exhaustive(w: &Permutation, k: usize) -> Result<usize> {
    check_k(w, k)?;
    let n = w.n();
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= ASSIGNMENT_BUDGET);
    if total.is_none() {
        return Err(Error::Capacity(format!(
            "exhaustive localdecr enumerates k^n = {}^{} assignments, over budget {}",
            k, n, ASSIGNMENT_BUDGET
        )));
    }
    let word = w.word();
    let mut digits = vec![0usize; n];
    let mut last: Vec<Option<usize>> = vec![None; k];
    let mut best = 0usize;
    loop {
        last.iter_mut().for_each(|s| *s = None);
        let mut score = 0usize;
        for (i, &v) in word.iter().enumerate() {
            let lab = digits[i];
            match last[lab] {
                None => score += 1,
                Some(prev) if v < prev => score += 1,
                _ => {}
            }
            last[lab] = Some(v);
        }
        best = best.max(score);

        // odometer
        let mut pos = 0;
        while pos < n {
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        if pos == n {
            return Ok(best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn incr_oracle_paper_values() {
        let w = perm("5623714");
        assert_eq!(incr_k_oracle(&w, 1).unwrap(), 3);
        assert_eq!(incr_k_oracle(&w, 2).unwrap(), 6);
        assert_eq!(incr_k_oracle(&w, 3).unwrap(), 7);
        assert_eq!(incr_k_oracle(&w, 7).unwrap(), 7);
        let id = Permutation::identity(6).unwrap();
        assert_eq!(incr_k_oracle(&id, 1).unwrap(), 6);
        // lambda_1 + lambda_2 of sh P(452361) = 3 + 2
        assert_eq!(incr_k_oracle(&perm("452361"), 2).unwrap(), 5);
    }

    #[test]
    fn decr_oracle_paper_values() {
        let w = perm("5623714");
        assert_eq!(decr_k_oracle(&w, 1).unwrap(), 3);
        assert_eq!(decr_k_oracle(&w, 2).unwrap(), 5);
        assert_eq!(decr_k_oracle(&w, 3).unwrap(), 7);
        let rev = perm("54321");
        assert_eq!(decr_k_oracle(&rev, 1).unwrap(), 5);
        assert_eq!(decr_k_oracle(&perm("452361"), 2).unwrap(), 5);
    }

    #[test]
    fn local_incr_paper_values() {
        let w = perm("5623714");
        assert_eq!(local_incr_k(&w, 1).unwrap(), 3);
        assert_eq!(local_incr_k(&w, 2).unwrap(), 5);
        assert_eq!(local_incr_k(&w, 3).unwrap(), 7);
        assert_eq!(local_incr_k(&w, 7).unwrap(), 7);
        for n in 1..=5 {
            for w in Permutation::all(n) {
                assert_eq!(local_incr_k(&w, n).unwrap(), n, "singleton blocks for {}", w);
            }
        }
    }

    #[test]
    fn local_decr_paper_values() {
        let w = perm("5623714");
        for f in [local_decr_k, local_decr_k_exhaustive] {
            assert_eq!(f(&w, 1).unwrap(), 3);
            assert_eq!(f(&w, 2).unwrap(), 6);
            assert_eq!(f(&w, 3).unwrap(), 7);
        }
        // the identity's soliton partition is one row of n, so the conjugate
        // is all ones and localdecr_k = k; singleton subsequences witness it
        let id = Permutation::identity(5).unwrap();
        for k in 1..=5 {
            assert_eq!(local_decr_k_exhaustive(&id, k).unwrap(), k);
            assert_eq!(local_decr_k(&id, k).unwrap(), k);
        }
    }

    #[test]
    fn profile_goldens() {
        let p = greene_profile(&perm("5623714"));
        assert_eq!(p.incr, vec![3, 6, 7, 7, 7, 7, 7]);
        assert_eq!(p.decr, vec![3, 5, 7, 7, 7, 7, 7]);
        assert_eq!(p.local_incr, vec![3, 5, 7, 7, 7, 7, 7]);
        assert_eq!(p.local_decr, vec![3, 6, 7, 7, 7, 7, 7]);

        let p = greene_profile(&perm("452361"));
        assert_eq!(p.local_incr, p.incr);
        assert_eq!(p.local_decr, p.decr);

        let p = greene_profile(&perm("1"));
        assert_eq!(p.incr, vec![1]);
        assert_eq!(p.decr, vec![1]);
        assert_eq!(p.local_incr, vec![1]);
        assert_eq!(p.local_decr, vec![1]);
    }

    #[test]
    fn profiles_are_monotone_and_dominated() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let p = greene_profile(&w);
                for seq in [&p.incr, &p.decr, &p.local_incr, &p.local_decr] {
                    assert_eq!(seq.len(), n);
                    assert!(seq.windows(2).all(|x| x[0] <= x[1]));
                    assert_eq!(*seq.last().unwrap(), n);
                }
                for k in 0..n {
                    assert!(p.local_incr[k] <= p.incr[k], "{} at k={}", w, k + 1);
                    assert!(p.local_decr[k] <= p.decr[k], "{} at k={}", w, k + 1);
                }
            }
        }
    }

    #[test]
    fn domain_and_capacity_errors() {
        let w = perm("321");
        assert!(matches!(incr_k_oracle(&w, 0), Err(Error::Domain(_))));
        assert!(matches!(decr_k_oracle(&w, 4), Err(Error::Domain(_))));
        assert!(matches!(local_incr_k(&w, 0), Err(Error::Domain(_))));
        assert!(matches!(local_decr_k_exhaustive(&w, 4), Err(Error::Domain(_))));

        let big = Permutation::identity(13).unwrap();
        assert!(matches!(incr_profile_oracle(&big), Err(Error::Capacity(_))));
        assert!(matches!(local_decr_k_exhaustive(&big, 5), Err(Error::Capacity(_))));
    }
}
