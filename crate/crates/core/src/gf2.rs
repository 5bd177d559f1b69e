//! Dense bit-packed linear algebra over GF(2).
//!
//! All code-construction matrices in this crate are small (at most a few
//! hundred columns), so a dense bit-packed representation is used throughout.
//! Large sparse check matrices (detector error models) live in
//! [`crate::decoder::DemMatrix`] instead.

use std::fmt;

use thiserror::Error;

/// Hard cap on dense storage; anything wider belongs in a sparse structure.
pub const MAX_DENSE_COLS: usize = 1 << 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("matrix too wide for dense storage: {0} columns (max {MAX_DENSE_COLS})")]
    TooWide(usize),
    #[error("malformed matrix text: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_DENSE_COLS, "matrix too wide for dense storage");
        let words_per_row = cols.div_ceil(64).max(1);
        BinaryMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from explicit row supports (column indices of the 1 entries).
    pub fn from_rows(rows: usize, cols: usize, supports: &[Vec<usize>]) -> Self {
        assert_eq!(rows, supports.len());
        let mut m = Self::zeros(rows, cols);
        for (r, support) in supports.iter().enumerate() {
            for &c in support {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let w = self.data[r * self.words_per_row + c / 64];
        (w >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words_per_row + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * self.words_per_row);
            (
                &lo[src * self.words_per_row..(src + 1) * self.words_per_row],
                &mut hi[..self.words_per_row],
            )
        } else {
            let (lo, hi) = self.data.split_at_mut(src * self.words_per_row);
            (
                &hi[..self.words_per_row],
                &mut lo[dst * self.words_per_row..(dst + 1) * self.words_per_row],
            )
        };
        for (x, y) in b.iter_mut().zip(a) {
            *x ^= *y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + w, b * self.words_per_row + w);
        }
    }

    /// Column indices of the 1 entries in a row, ascending.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.get(r, c)).collect()
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn max_col_weight(&self) -> usize {
        (0..self.cols).map(|c| self.col_weight(c)).max().unwrap_or(0)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (BinaryMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(rank, pr);
            for r in 0..m.rows {
                if r != rank && m.get(r, c) {
                    m.xor_row_into(rank, r);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column, in
    /// ascending free-column order. Each vector has a 1 at its free column
    /// and 0 at every other free column, which makes the basis canonical.
    pub fn null_space(&self) -> Vec<Vec<bool>> {
        let (rref, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set[f] {
                continue;
            }
            let mut vec = vec![false; self.cols];
            vec[f] = true;
            for (i, &p) in pivots.iter().enumerate() {
                vec[p] = rref.get(i, f);
            }
            basis.push(vec);
        }
        basis
    }

    /// Free (non-pivot) column indices, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        let (_, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// `self * other^T == 0` over GF(2); the CSS commutation test.
    pub fn product_with_transpose_is_zero(&self, other: &BinaryMatrix) -> Result<bool, Gf2Error> {
        if self.cols != other.cols {
            return Err(Gf2Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        for a in 0..self.rows {
            let ra = self.row_words(a);
            for b in 0..other.rows {
                let rb = other.row_words(b);
                let parity: u32 = ra
                    .iter()
                    .zip(rb)
                    .map(|(x, y)| (x & y).count_ones())
                    .sum::<u32>()
                    & 1;
                if parity == 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Kronecker product with the all-ones `1 x width` row vector: every 1
    /// entry expands into a run of `width` ones.
    pub fn kron_ones_row(&self, width: usize) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.rows, self.cols * width);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    for k in 0..width {
                        out.set(r, c * width + k, true);
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal `I_n (x) self`: n copies of `self` along the diagonal.
    pub fn block_diagonal(&self, n: usize) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.rows * n, self.cols * n);
        for b in 0..n {
            for r in 0..self.rows {
                for c in 0..self.cols {
                    if self.get(r, c) {
                        out.set(b * self.rows + r, b * self.cols + c, true);
                    }
                }
            }
        }
        out
    }

    /// Plain-text form: first line "rows cols", then one 0/1 string per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, Gf2Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Gf2Error::Parse("empty input".into()))?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Gf2Error::Parse("bad header".into()))?;
        let cols: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Gf2Error::Parse("bad header".into()))?;
        if cols > MAX_DENSE_COLS {
            return Err(Gf2Error::TooWide(cols));
        }
        let mut m = BinaryMatrix::zeros(rows, cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Gf2Error::Parse(format!("missing row {r}")))?;
            let line = line.trim();
            if line.len() != cols {
                return Err(Gf2Error::Parse(format!(
                    "row {r} has {} entries, expected {cols}",
                    line.len()
                )));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    _ => return Err(Gf2Error::Parse(format!("bad character '{ch}' in row {r}"))),
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{})", self.rows, self.cols)?;
        if self.rows <= 20 && self.cols <= 64 {
            writeln!(f)?;
            for r in 0..self.rows {
                for c in 0..self.cols {
                    write!(f, "{}", u8::from(self.get(r, c)))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Hamming weight of a bool vector.
pub fn weight(v: &[bool]) -> usize {
    v.iter().filter(|&&b| b).count()
}

/// Parity of the overlap of two supports, given as bool vectors.
pub fn overlap_parity(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).filter(|(&x, &y)| x && y).count() % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Textbook row reduction on Vec<Vec<bool>>, used as an independent
    /// reference for the bit-packed implementation.
    fn naive_rank(rows: &[Vec<bool>]) -> usize {
        let mut m: Vec<Vec<bool>> = rows.to_vec();
        if m.is_empty() {
            return 0;
        }
        let cols = m[0].len();
        let mut rank = 0;
        for c in 0..cols {
            let Some(pr) = (rank..m.len()).find(|&r| m[r][c]) else {
                continue;
            };
            m.swap(rank, pr);
            for r in 0..m.len() {
                if r != rank && m[r][c] {
                    let pivot = m[rank].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot) {
                        *x ^= *p;
                    }
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_identity() {
        assert_eq!(BinaryMatrix::identity(7).rank(), 7);
    }

    #[test]
    fn null_space_is_canonical_and_in_kernel() {
        let m = BinaryMatrix::from_rows(2, 4, &[vec![0, 1], vec![1, 2, 3]]);
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in 0..m.rows() {
                let parity = (0..m.cols()).filter(|&c| m.get(r, c) && v[c]).count() % 2;
                assert_eq!(parity, 0);
            }
        }
        let free = m.free_columns();
        for (v, &f) in ns.iter().zip(&free) {
            assert!(v[f]);
            for &g in &free {
                if g != f {
                    assert!(!v[g]);
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let m = BinaryMatrix::from_rows(3, 5, &[vec![0, 4], vec![2], vec![1, 2, 3]]);
        let text = m.to_text();
        let back = BinaryMatrix::from_text(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn kron_ones_row_expands_support() {
        let m = BinaryMatrix::from_rows(1, 3, &[vec![0, 2]]);
        let k = m.kron_ones_row(4);
        assert_eq!(k.row_support(0), vec![0, 1, 2, 3, 8, 9, 10, 11]);
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_naive_reference(seed in 0u64..500) {
            // Small pseudo-random matrices driven by a splitmix step.
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            let mut next = || {
                state ^= state >> 30;
                state = state.wrapping_mul(0xbf58476d1ce4e5b9);
                state ^= state >> 27;
                state
            };
            let rows = (next() % 20 + 1) as usize;
            let cols = (next() % 20 + 1) as usize;
            let mut m = BinaryMatrix::zeros(rows, cols);
            let mut reference = vec![vec![false; cols]; rows];
            for r in 0..rows {
                for c in 0..cols {
                    if next() % 2 == 1 {
                        m.set(r, c, true);
                        reference[r][c] = true;
                    }
                }
            }
            proptest::prop_assert_eq!(m.rank(), naive_rank(&reference));
            // k = n - rank also pins the null space dimension.
            proptest::prop_assert_eq!(m.null_space().len(), cols - m.rank());
        }
    }
}
