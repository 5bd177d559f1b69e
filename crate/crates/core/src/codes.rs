//! Classical binary codes, the built-in matchable outer codes, and the
//! combined quantum code obtained by stacking a phase-flip repetition inner
//! code under a bit-flip outer code.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{overlap_parity, weight, BinaryMatrix, Gf2Error};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("minimum-distance enumeration refused: k = {k} exceeds bound {bound}")]
    DistanceTooLarge { k: usize, bound: usize },
    #[error("repetition code length must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// Names of the built-in matchable outer codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OuterCodeName {
    Code1593,
    Code1565,
    Code1638,
}

impl OuterCodeName {
    pub const ALL: [OuterCodeName; 3] = [
        OuterCodeName::Code1593,
        OuterCodeName::Code1565,
        OuterCodeName::Code1638,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "code_15_9_3" | "15_9_3" | "[15,9,3]" => Some(OuterCodeName::Code1593),
            "code_15_6_5" | "15_6_5" | "[15,6,5]" => Some(OuterCodeName::Code1565),
            "code_16_3_8" | "16_3_8" | "[16,3,8]" => Some(OuterCodeName::Code1638),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OuterCodeName::Code1593 => "code_15_9_3",
            OuterCodeName::Code1565 => "code_15_6_5",
            OuterCodeName::Code1638 => "code_16_3_8",
        }
    }
}

/// A classical linear code given by a parity-check matrix.
#[derive(Debug, Clone)]
pub struct ClassicalCode {
    pub h: BinaryMatrix,
    pub n: usize,
    pub k: usize,
    pub d_claimed: Option<usize>,
}

impl ClassicalCode {
    pub fn new(h: BinaryMatrix, d_claimed: Option<usize>) -> Self {
        let n = h.cols();
        let k = n - h.rank();
        ClassicalCode { h, n, k, d_claimed }
    }

    pub fn checks(&self) -> usize {
        self.h.rows()
    }
}

/// The three built-in matchable outer codes.
pub fn builtin_outer(name: OuterCodeName) -> ClassicalCode {
    match name {
        OuterCodeName::Code1593 => ClassicalCode::new(
            BinaryMatrix::from_rows(
                6,
                15,
                &[
                    vec![0, 2, 4, 5],
                    vec![6, 9, 12, 14],
                    vec![5, 8, 9, 13],
                    vec![4, 10, 11, 12],
                    vec![3, 7, 8, 11],
                    vec![1, 2, 3, 6],
                ],
            ),
            Some(3),
        ),
        OuterCodeName::Code1565 => ClassicalCode::new(
            BinaryMatrix::from_rows(
                10,
                15,
                &[
                    vec![0, 4, 5],
                    vec![0, 1, 6],
                    vec![1, 2, 7],
                    vec![2, 3, 8],
                    vec![3, 4, 9],
                    vec![9, 10, 14],
                    vec![5, 12, 13],
                    vec![6, 10, 11],
                    vec![8, 11, 12],
                    vec![7, 13, 14],
                ],
            ),
            Some(5),
        ),
        OuterCodeName::Code1638 => ClassicalCode::new(
            BinaryMatrix::from_rows(
                13,
                16,
                &[
                    vec![0, 4, 5, 6],
                    vec![0, 1],
                    vec![1, 2],
                    vec![2, 3],
                    vec![4, 7],
                    vec![7, 8],
                    vec![8, 9],
                    vec![5, 10],
                    vec![6, 13],
                    vec![10, 11],
                    vec![11, 12],
                    vec![13, 14],
                    vec![14, 15],
                ],
            ),
            Some(8),
        ),
    }
}

/// The `[d, 1, d]` chain-check repetition code. `d = 1` gives the trivial
/// code with an empty check matrix. Even lengths are accepted.
pub fn repetition(d: usize) -> Result<ClassicalCode, CodeError> {
    if d == 0 {
        return Err(CodeError::ZeroLength);
    }
    let supports: Vec<Vec<usize>> = (0..d.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
    let h = BinaryMatrix::from_rows(d - 1, d, &supports);
    Ok(ClassicalCode::new(h, Some(d)))
}

/// Exhaustive minimum distance over the code's 2^k codewords.
pub fn min_distance_bruteforce(code: &ClassicalCode) -> Result<usize, CodeError> {
    const BOUND: usize = 20;
    if code.k > BOUND {
        return Err(CodeError::DistanceTooLarge {
            k: code.k,
            bound: BOUND,
        });
    }
    let basis = code.h.null_space();
    debug_assert_eq!(basis.len(), code.k);
    let mut best = code.n + 1;
    let mut word = vec![false; code.n];
    // Gray-code walk over the 2^k combinations; each step flips one basis vector.
    for m in 1u64..(1u64 << code.k) {
        let flip = m.trailing_zeros() as usize;
        for (w, b) in word.iter_mut().zip(&basis[flip]) {
            *w ^= *b;
        }
        let wt = weight(&word);
        if wt > 0 && wt < best {
            best = wt;
        }
    }
    Ok(if code.k == 0 { 0 } else { best })
}

/// A code is matchable when every column of its check matrix has weight at
/// most 2, so a single data error triggers at most two checks.
pub fn is_matchable(h: &BinaryMatrix) -> bool {
    h.max_col_weight() <= 2
}

/// The combined quantum code: stabilizer supports split by which Pauli error
/// their syndrome reveals. Rows of `h_x` are full-block Z-type stabilizers
/// (they detect X errors); rows of `h_z` are the in-block XX stabilizers of
/// the repetition inner code (they detect Z errors).
#[derive(Debug, Clone)]
pub struct CssCode {
    pub h_x: BinaryMatrix,
    pub h_z: BinaryMatrix,
    pub n_phys: usize,
    pub k: usize,
    pub d_x: Option<usize>,
    pub d_z: usize,
    /// One X-logical per encoded qubit: a single-qubit X in each block of an
    /// outer codeword's support.
    pub logical_x: Vec<Vec<usize>>,
    /// One Z-logical per encoded qubit: all qubits of the dual-basis block.
    pub logical_z: Vec<Vec<usize>>,
}

/// Stack `d_z`-qubit repetition blocks under the given outer code.
pub fn combine(outer: &ClassicalCode, d_z: usize) -> Result<CssCode, CodeError> {
    if d_z == 0 {
        return Err(CodeError::ZeroLength);
    }
    let n = outer.n;
    let h_x = outer.h.kron_ones_row(d_z);
    let h_z = repetition(d_z)?.h.block_diagonal(n);

    // Canonical logical operators from the reduced echelon form of the outer
    // check matrix: the null-space basis vector for free column f has support
    // c_j; X logicals put one X on the first qubit of each support block, and
    // the paired Z logical covers the whole block at the free column.
    let basis = outer.h.null_space();
    let free = outer.h.free_columns();
    debug_assert_eq!(basis.len(), free.len());
    let logical_x: Vec<Vec<usize>> = basis
        .iter()
        .map(|cw| {
            (0..n)
                .filter(|&b| cw[b])
                .map(|b| b * d_z)
                .collect()
        })
        .collect();
    let logical_z: Vec<Vec<usize>> = free
        .iter()
        .map(|&f| (f * d_z..(f + 1) * d_z).collect())
        .collect();

    Ok(CssCode {
        h_x,
        h_z,
        n_phys: n * d_z,
        k: outer.k,
        d_x: outer.d_claimed,
        d_z,
        logical_x,
        logical_z,
    })
}

/// `h_x * h_z^T == 0` over GF(2).
pub fn css_commutes(css: &CssCode) -> bool {
    css.h_x
        .product_with_transpose_is_zero(&css.h_z)
        .unwrap_or(false)
}

/// Full symplectic validity of the logical operators: pairwise anticommutation
/// exactly on matching indices, commutation with every stabilizer row.
pub fn logicals_valid(css: &CssCode) -> bool {
    let to_vec = |support: &[usize]| {
        let mut v = vec![false; css.n_phys];
        for &q in support {
            v[q] = true;
        }
        v
    };
    let xs: Vec<Vec<bool>> = css.logical_x.iter().map(|s| to_vec(s)).collect();
    let zs: Vec<Vec<bool>> = css.logical_z.iter().map(|s| to_vec(s)).collect();
    for (i, x) in xs.iter().enumerate() {
        for (j, z) in zs.iter().enumerate() {
            if overlap_parity(x, z) != (i == j) {
                return false;
            }
        }
    }
    // X logicals must commute with the Z-type stabilizers (rows of h_x), and
    // Z logicals with the X-type stabilizers (rows of h_z).
    for x in &xs {
        for r in 0..css.h_x.rows() {
            let row: Vec<bool> = (0..css.n_phys).map(|c| css.h_x.get(r, c)).collect();
            if overlap_parity(x, &row) {
                return false;
            }
        }
    }
    for z in &zs {
        for r in 0..css.h_z.rows() {
            let row: Vec<bool> = (0..css.n_phys).map(|c| css.h_z.get(r, c)).collect();
            if overlap_parity(z, &row) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_15_9_3_shape_and_row0() {
        let code = builtin_outer(OuterCodeName::Code1593);
        assert_eq!(code.h.rows(), 6);
        assert_eq!(code.h.cols(), 15);
        assert_eq!(code.h.row_support(0), vec![0, 2, 4, 5]);
        assert_eq!(code.k, 9);
    }

    #[test]
    fn builtin_16_3_8_shape() {
        let code = builtin_outer(OuterCodeName::Code1638);
        assert_eq!(code.h.rows(), 13);
        assert_eq!(code.h.cols(), 16);
        assert_eq!(code.k, 3);
    }

    #[test]
    fn builtin_15_6_5_rank_gives_k6() {
        let code = builtin_outer(OuterCodeName::Code1565);
        assert_eq!(code.k, 15 - code.h.rank());
        assert_eq!(code.k, 6);
    }

    #[test]
    fn builtin_distances_match_claims() {
        for name in OuterCodeName::ALL {
            let code = builtin_outer(name);
            let d = min_distance_bruteforce(&code).unwrap();
            assert_eq!(Some(d), code.d_claimed, "{name:?}");
        }
    }

    #[test]
    fn builtins_are_matchable() {
        for name in OuterCodeName::ALL {
            assert!(is_matchable(&builtin_outer(name).h), "{name:?}");
        }
    }

    #[test]
    fn all_ones_3x3_not_matchable() {
        let h = BinaryMatrix::from_rows(3, 3, &[vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]]);
        assert!(!is_matchable(&h));
    }

    #[test]
    fn repetition_edge_cases() {
        assert!(repetition(0).is_err());
        let d1 = repetition(1).unwrap();
        assert_eq!(d1.h.rows(), 0);
        assert_eq!(d1.k, 1);
        let d3 = repetition(3).unwrap();
        assert_eq!(d3.h.row_support(0), vec![0, 1]);
        assert_eq!(d3.h.row_support(1), vec![1, 2]);
        let d9 = repetition(9).unwrap();
        assert_eq!(d9.h.rows(), 8);
        assert_eq!(min_distance_bruteforce(&d9).unwrap(), 9);
        assert_eq!(min_distance_bruteforce(&repetition(7).unwrap()).unwrap(), 7);
    }

    #[test]
    fn combine_15_9_3_at_dz9() {
        let outer = builtin_outer(OuterCodeName::Code1593);
        let css = combine(&outer, 9).unwrap();
        assert_eq!(css.n_phys, 135);
        assert_eq!(css.k, 9);
        assert_eq!(css.d_x, Some(3));
        assert_eq!(css.d_z, 9);
        assert_eq!(css.h_x.rows(), 6);
        assert_eq!(css.h_x.cols(), 135);
        assert_eq!(css.h_z.rows(), 15 * 8);
        assert!(css_commutes(&css));
        assert!(logicals_valid(&css));
    }

    #[test]
    fn combine_dz1_degenerate() {
        let outer = builtin_outer(OuterCodeName::Code1565);
        let css = combine(&outer, 1).unwrap();
        assert_eq!(css.h_z.rows(), 0);
        assert_eq!(css.n_phys, 15);
        assert!(css_commutes(&css));
    }

    #[test]
    fn combine_is_rate_preserving() {
        for name in OuterCodeName::ALL {
            let outer = builtin_outer(name);
            for d_z in [3, 5, 11] {
                let css = combine(&outer, d_z).unwrap();
                assert_eq!(css.k, outer.k);
                assert_eq!(css.n_phys, outer.n * d_z);
            }
        }
    }

    #[test]
    fn css_commutes_rejects_hand_built_violation() {
        let css = CssCode {
            h_x: BinaryMatrix::from_rows(1, 2, &[vec![0]]),
            h_z: BinaryMatrix::from_rows(1, 2, &[vec![0, 1]]),
            n_phys: 2,
            k: 0,
            d_x: None,
            d_z: 1,
            logical_x: vec![],
            logical_z: vec![],
        };
        assert!(!css_commutes(&css));
    }

    #[test]
    fn builtins_commute_for_all_small_dz() {
        for name in OuterCodeName::ALL {
            let outer = builtin_outer(name);
            for d_z in 3..=15 {
                let css = combine(&outer, d_z).unwrap();
                assert!(css_commutes(&css), "{name:?} d_z={d_z}");
                assert!(logicals_valid(&css), "{name:?} d_z={d_z}");
            }
        }
    }
}
