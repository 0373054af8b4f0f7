//! Exact nullspace computations: GF(2) Gaussian elimination and integer
//! kernels via Hermite-style row reduction on the transpose.

/// Dense GF(2) matrix with bit-packed rows.
#[derive(Clone)]
pub struct BitMatrix {
    pub rows: usize,
    pub cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = r * self.words + c / 64;
        let mask = 1u64 << (c % 64);
        if v {
            self.data[w] |= mask;
        } else {
            self.data[w] &= !mask;
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words, src * self.words);
        for k in 0..self.words {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    /// Basis of the right nullspace {x : Mx = 0}, one bit vector per basis
    /// element (length `cols`).
    pub fn nullspace(mut self) -> Vec<Vec<bool>> {
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let mut pivot = None;
            for r in row..self.rows {
                if self.get(r, col) {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(row, p);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row);
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![false; self.cols];
            v[free] = true;
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                if self.get(r, free) {
                    v[pc] = true;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(self) -> usize {
        let cols = self.cols;
        cols - self.nullspace().len()
    }
}

/// Basis of the integer kernel lattice {x in Z^n : Mx = 0} for an m x n
/// integer matrix, via row reduction of [M^T | I] to echelon form: the
/// transformation rows attached to zero rows of the echelon part span the
/// kernel saturatedly (the transformation stays unimodular).
pub fn int_kernel(mat: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let m = mat.len();
    let n = if m == 0 { 0 } else { mat[0].len() };
    if n == 0 {
        return Vec::new();
    }
    // work = M^T (n rows of length m), aug = identity.
    let mut work: Vec<Vec<i128>> = (0..n).map(|c| (0..m).map(|r| mat[r][c]).collect()).collect();
    let mut aug: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();

    let mut row = 0;
    for col in 0..m {
        loop {
            // Pick the nonzero entry of minimal absolute value in this column.
            let mut best: Option<(usize, i128)> = None;
            for r in row..n {
                let v = work[r][col];
                if v != 0 && best.map_or(true, |(_, b)| v.abs() < b.abs()) {
                    best = Some((r, v));
                }
            }
            let Some((p, pv)) = best else { break };
            work.swap(row, p);
            aug.swap(row, p);
            let mut done = true;
            for r in row + 1..n {
                let q = div_round(work[r][col], pv);
                if q != 0 {
                    for k in 0..m {
                        work[r][k] -= q * work[row][k];
                    }
                    for k in 0..n {
                        aug[r][k] -= q * aug[row][k];
                    }
                }
                if work[r][col] != 0 {
                    done = false;
                }
            }
            if done {
                row += 1;
                break;
            }
        }
        if row == n {
            break;
        }
    }

    (row..n).map(|r| aug[r].clone()).collect()
}

/// Rounded division, minimizing |a - q b|.
fn div_round(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r < 0) == (b < 0) { 1 } else { -1 }
    } else {
        q
    }
}

/// Rank of an integer matrix (over Q), by fraction-free elimination.
pub fn int_rank(mat: &[Vec<i128>]) -> usize {
    let m = mat.len();
    if m == 0 {
        return 0;
    }
    let n = mat[0].len();
    n - int_kernel(mat).len().min(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_nullspace_small() {
        // x + y = 0, y + z = 0 over GF(2): kernel = span{(1,1,1)}.
        let mut m = BitMatrix::zero(2, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 2, true);
        let basis = m.nullspace();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![true, true, true]);
    }

    #[test]
    fn int_kernel_small() {
        // 2x + 4y = 0 over Z: kernel lattice = span{(2, -1)} (saturated).
        let basis = int_kernel(&[vec![2, 4]]);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_eq!(2 * v[0] + 4 * v[1], 0);
        // Saturation: (2, -1) must be expressible, i.e. gcd of entries 1.
        let g = gcd(v[0].abs(), v[1].abs());
        assert_eq!(g, 1);
    }

    #[test]
    fn int_kernel_rank() {
        let mat = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(int_rank(&mat), 2);
        let basis = int_kernel(&mat);
        assert_eq!(basis.len(), 1);
        for row in &mat {
            let s: i128 = row.iter().zip(&basis[0]).map(|(a, b)| a * b).sum();
            assert_eq!(s, 0);
        }
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}
