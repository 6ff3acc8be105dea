//! Robinson-Schensted row insertion, its inverse, enumeration of standard
//! Young tableaux, and the distinguished recording tableau whose fiber has
//! maximal steady-state time.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::tableau::Tableau;

/// The (P, Q) pair produced by RS insertion: same shape, both standard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsPair {
    /// Insertion tableau P(w).
    pub p: Tableau,
    /// Recording tableau Q(w).
    pub q: Tableau,
}

/// RS row insertion: each value bumps the smallest entry of the row
/// strictly greater than it, or lands at the row's end; the recording
/// tableau marks cell creation order.
pub fn rs_insert(w: &Permutation) -> RsPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in w.word().iter().enumerate() {
        let mut cur = value;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![cur]);
                q.push(vec![step + 1]);
                break;
            }
            let k = p[r].partition_point(|&x| x < cur);
            if k == p[r].len() {
                p[r].push(cur);
                q[r].push(step + 1);
                break;
            }
            std::mem::swap(&mut cur, &mut p[r][k]);
            r += 1;
        }
    }
    RsPair {
        p: Tableau::new(p).expect("insertion builds a valid tableau"),
        q: Tableau::new(q).expect("recording builds a valid tableau"),
    }
}

/// P(w) without the recording tableau.
pub fn insertion_tableau(w: &Permutation) -> Tableau {
    rs_insert(w).p
}

/// Inverse RS: reverse-bump cells in decreasing recording-label order.
/// Errors on mismatched shapes or nonstandard input.
pub fn inverse_rs(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::Domain(format!(
            "inverse RS needs equal shapes, got {} and {}",
            p.shape(),
            q.shape()
        )));
    }
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::Domain("inverse RS needs standard tableaux".into()));
    }
    let n = p.size();
    let mut cell_of_label = vec![(0usize, 0usize); n + 1];
    for (r, row) in q.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cell_of_label[v] = (r, c);
        }
    }
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let mut word = vec![0usize; n];
    for label in (1..=n).rev() {
        let (r, c) = cell_of_label[label];
        debug_assert_eq!(c + 1, rows[r].len(), "label {} must sit at a corner", label);
        let mut v = rows[r].pop().unwrap();
        if rows[r].is_empty() {
            rows.pop();
        }
        for upper in (0..r).rev() {
            // the value that bumped v came from the rightmost entry < v
            let k = rows[upper].partition_point(|&x| x < v);
            debug_assert!(k > 0, "standardness guarantees a smaller entry above");
            std::mem::swap(&mut v, &mut rows[upper][k - 1]);
        }
        word[label - 1] = v;
    }
    Permutation::new(word)
}

/// All standard Young tableaux of the given shape, filled by backtracking
/// in increasing label order (rows tried top to bottom).
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let n = shape.sum();
    let mut fill: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();

    fn go(label: usize, n: usize, shape: &Partition, fill: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if label > n {
            out.push(Tableau::new(fill.clone()).expect("backtracking fills are valid"));
            return;
        }
        for r in 0..shape.len() {
            let c = fill[r].len();
            if c < shape.part(r) && (r == 0 || fill[r - 1].len() > c) {
                fill[r].push(label);
                go(label + 1, n, shape, fill, out);
                fill[r].pop();
            }
        }
    }

    if n == 0 {
        return Vec::new();
    }
    go(1, n, shape, &mut fill, &mut out);
    out
}

/// All standard Young tableaux with `n` cells, over every shape of `n`.
pub fn all_standard_tableaux(n: usize) -> Vec<Tableau> {
    Partition::all_of(n)
        .iter()
        .flat_map(standard_tableaux)
        .collect()
}

/// The recording tableau with first row 1,2,5,6,...,n-1, second row 3,4,
/// and third row n. Defined for n >= 5.
pub fn qhat_tableau(n: usize) -> Result<Tableau> {
    if n < 5 {
        return Err(Error::Domain(format!("Q-hat is defined for n >= 5, got {}", n)));
    }
    let mut first = vec![1, 2];
    first.extend(5..n);
    Tableau::new(vec![first, vec![3, 4], vec![n]])
}

/// The fiber of Q-hat under RS: all w with Q(w) = Q-hat, obtained by
/// applying inverse RS to every standard P of shape (n-3, 2, 1).
/// Sorted by one-line word.
pub fn enumerate_qhat_class(n: usize) -> Result<Vec<Permutation>> {
    let qhat = qhat_tableau(n)?;
    let mut out: Vec<Permutation> = standard_tableaux(&qhat.shape())
        .iter()
        .map(|p| inverse_rs(p, &qhat).expect("same standard shape"))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Hook-length count of standard tableaux, as an independent check on
    /// the backtracking enumeration.
    fn hook_length_count(shape: &Partition) -> u64 {
        let conj = shape.conjugate();
        let mut product: u128 = 1;
        for (r, &len) in shape.parts().iter().enumerate() {
            for c in 0..len {
                let hook = (len - c) + (conj.part(c) - r) - 1;
                product *= hook as u128;
            }
        }
        let fact: u128 = (1..=shape.sum() as u128).product();
        (fact / product) as u64
    }

    #[test]
    fn insertion_goldens() {
        let pair = rs_insert(&perm("452361"));
        assert_eq!(pair.p, t(&[&[1, 3, 6], &[2, 5], &[4]]));
        assert_eq!(pair.q, t(&[&[1, 2, 5], &[3, 4], &[6]]));

        let pair = rs_insert(&perm("5623714"));
        assert_eq!(pair.p, t(&[&[1, 3, 4], &[2, 6, 7], &[5]]));
        assert_eq!(pair.q, t(&[&[1, 2, 5], &[3, 4, 7], &[6]]));

        let id = Permutation::identity(5).unwrap();
        let pair = rs_insert(&id);
        assert_eq!(pair.p, t(&[&[1, 2, 3, 4, 5]]));
        assert_eq!(pair.q, pair.p);
    }

    #[test]
    fn reading_word_inserts_to_its_tableau() {
        for n in 1..=6 {
            for tab in all_standard_tableaux(n) {
                let r = tab.row_reading_word().unwrap();
                assert_eq!(rs_insert(&r).p, tab, "P(reading word) != T for {:?}", tab);
            }
        }
    }

    #[test]
    fn inverse_round_trip_small() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let pair = rs_insert(&w);
                assert_eq!(inverse_rs(&pair.p, &pair.q).unwrap(), w);
            }
        }
    }

    #[test]
    fn inverse_golden_and_errors() {
        let p = t(&[&[1, 3, 6], &[2, 5], &[4]]);
        let q = t(&[&[1, 2, 5], &[3, 4], &[6]]);
        assert_eq!(inverse_rs(&p, &q).unwrap(), perm("452361"));

        let wrong_shape = t(&[&[1, 2, 3], &[4, 5], &[6]]);
        assert!(inverse_rs(&p, &wrong_shape).is_err());
        let nonstandard = t(&[&[1, 3, 4], &[2, 7], &[5, 6]]);
        assert!(inverse_rs(&nonstandard, &nonstandard).is_err());
    }

    #[test]
    fn diagonal_pairs_are_involutions() {
        for tab in all_standard_tableaux(5) {
            let w = inverse_rs(&tab, &tab).unwrap();
            let pair = rs_insert(&w);
            assert_eq!(pair.p, tab);
            assert_eq!(pair.q, tab);
        }
    }

    #[test]
    fn syt_enumeration_matches_hook_lengths() {
        for n in 1..=8 {
            for shape in Partition::all_of(n) {
                let tabs = standard_tableaux(&shape);
                assert_eq!(tabs.len() as u64, hook_length_count(&shape), "shape {}", shape);
                for tab in &tabs {
                    assert!(tab.is_standard());
                    assert_eq!(tab.shape(), shape);
                }
            }
        }
    }

    #[test]
    fn qhat_tableau_form() {
        assert_eq!(qhat_tableau(5).unwrap(), t(&[&[1, 2], &[3, 4], &[5]]));
        assert_eq!(qhat_tableau(6).unwrap(), t(&[&[1, 2, 5], &[3, 4], &[6]]));
        assert_eq!(qhat_tableau(8).unwrap(), t(&[&[1, 2, 5, 6, 7], &[3, 4], &[8]]));
        assert!(qhat_tableau(4).is_err());
    }

    #[test]
    fn qhat_class_n5_and_n6() {
        let five: Vec<String> =
            enumerate_qhat_class(5).unwrap().iter().map(|w| w.to_string()).collect();
        let mut expected5 = vec!["45132", "25143", "35142", "45231", "35241"];
        expected5.sort();
        assert_eq!(five, expected5);

        let sixteen: Vec<String> =
            enumerate_qhat_class(6).unwrap().iter().map(|w| w.to_string()).collect();
        let mut expected6 = vec![
            "451362", "251463", "351462", "452361", "352461", "561243", "261354", "361254",
            "461253", "561342", "261453", "361452", "461352", "562341", "362451", "462351",
        ];
        expected6.sort();
        assert_eq!(sixteen, expected6);
    }

    #[test]
    fn qhat_class_sizes_match_syt_counts() {
        // n(n-2)(n-4)/3 = 5, 16, 35, 64, 105 for n = 5..9
        let expected = [5usize, 16, 35, 64, 105];
        for (i, n) in (5..=9).enumerate() {
            let class = enumerate_qhat_class(n).unwrap();
            assert_eq!(class.len(), expected[i]);
            let shape = Partition::new(vec![n - 3, 2, 1]).unwrap();
            assert_eq!(class.len() as u64, hook_length_count(&shape));
            for w in &class {
                assert_eq!(rs_insert(w).q, qhat_tableau(n).unwrap());
            }
        }
    }

    #[test]
    fn qhat_members_satisfy_structure_lemma() {
        for n in 5..=9 {
            for w in enumerate_qhat_class(n).unwrap() {
                let v = w.word();
                assert!(v[2..n - 1].windows(2).all(|p| p[0] < p[1]), "w3..w(n-1) increasing: {}", w);
                assert!(v[n - 1] < v[1], "wn < w2: {}", w);
                assert!(v[0] < v[1], "w1 < w2: {}", w);
                assert!(v[2] < v[0], "w3 < w1: {}", w);
                assert!(v[2] < v[1], "w3 < w2: {}", w);
                assert!(v[3] < v[1], "w4 < w2: {}", w);
            }
        }
    }
}
