//! Vector-cycles and their rank over the rationals.

use num_integer::Integer;

use super::{Circuit, RauzyGraph};
use crate::error::{Error, Result};

/// μ(C) over the graph's edge order: entry `j` counts forward traversals of
/// edge `j` minus backward ones. Directed circuits never go backward.
pub fn vector_cycle(c: &Circuit, g: &RauzyGraph) -> Result<Vec<i64>> {
    let mut mu = vec![0i64; g.edge_count()];
    for e in c.edges() {
        let j = g
            .edge_index(e)
            .ok_or_else(|| Error::InvalidArgument(format!("edge {e} is not in the graph")))?;
        mu[j] += 1;
    }
    Ok(mu)
}

/// Rank over Q by fraction-free elimination; rows are kept primitive (gcd
/// of entries 1) so the integers stay small.
pub fn independent_rank(vectors: &[Vec<i64>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let dim = first.len();
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::InvalidArgument(format!(
            "vector of dimension {} in a family of dimension {dim}",
            v.len()
        )));
    }
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        let a = pivot_row[col];
        for row in rows.iter_mut().skip(rank + 1) {
            let b = row[col];
            if b == 0 {
                continue;
            }
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = *x * a - p * b;
            }
            let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rauzy::{build_rauzy_graph, elementary_circuits, DEFAULT_CIRCUIT_CAP};
    use crate::words::Word;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn abac_vector_cycles() {
        let p3 = w("abacabacabac");
        let g1 = build_rauzy_graph(&p3, 1).unwrap();
        let cs = elementary_circuits(&g1, DEFAULT_CIRCUIT_CAP).unwrap();
        // edge order ab, ac, ba, ca
        assert_eq!(vector_cycle(&cs[0], &g1).unwrap(), [1, 0, 1, 0]);
        assert_eq!(vector_cycle(&cs[1], &g1).unwrap(), [0, 1, 0, 1]);
        let vs: Vec<_> = cs.iter().map(|c| vector_cycle(c, &g1).unwrap()).collect();
        assert_eq!(
            independent_rank(&vs).unwrap(),
            g1.cyclomatic_number().unwrap()
        );

        let g2 = build_rauzy_graph(&p3, 2).unwrap();
        let cs = elementary_circuits(&g2, DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(vector_cycle(&cs[0], &g2).unwrap(), [1, 1, 1, 1]);

        // a circuit of Γ_2 is foreign to Γ_1
        assert!(matches!(
            vector_cycle(&cs[0], &g1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            independent_rank(&[vec![1, 0, 1, 0], vec![0, 1, 0, 1]]).unwrap(),
            2
        );
        assert_eq!(independent_rank(&[vec![1, 1], vec![2, 2]]).unwrap(), 1);
        assert_eq!(independent_rank(&[]).unwrap(), 0);
        assert_eq!(independent_rank(&[vec![0, 0]]).unwrap(), 0);
        assert!(matches!(
            independent_rank(&[vec![1], vec![1, 2]]),
            Err(Error::InvalidArgument(_))
        ));
    }

    /// Cofactor expansion.
    fn det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn full_rank_iff_nonzero_determinant(entries in prop::collection::vec(-3i64..=3, 16)) {
            let m: Vec<Vec<i64>> = entries.chunks(4).map(<[i64]>::to_vec).collect();
            let full = independent_rank(&m).unwrap() == 4;
            prop_assert_eq!(full, det(&m) != 0);
        }

        #[test]
        fn rank_ignores_duplicates_and_scaling(entries in prop::collection::vec(-4i64..=4, 12), k in 1i64..5) {
            let m: Vec<Vec<i64>> = entries.chunks(4).map(<[i64]>::to_vec).collect();
            let r = independent_rank(&m).unwrap();
            let mut more = m.clone();
            more.push(m[0].iter().map(|x| x * k).collect());
            more.push(m[1].iter().zip(&m[2]).map(|(a, b)| a - b).collect());
            prop_assert_eq!(independent_rank(&more).unwrap(), r);
        }
    }
}
