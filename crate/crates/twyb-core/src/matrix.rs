/// Dense integer matrices, row-major, exact i128 entries.
///
/// Sizes stay small (rows and columns are indexed by tuples over carriers of
/// size <= a few dozen), so dense storage and cubic algorithms are fine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        IntMat {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] += v;
    }

    pub fn col(&self, c: usize) -> Vec<i128> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Entrywise reduction into [0, n).
    pub fn reduced_mod(&self, n: u64) -> Vec<u64> {
        let m = n as i128;
        self.data
            .iter()
            .map(|&v| (((v % m) + m) % m) as u64)
            .collect()
    }

    /// self * v over the integers.
    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMat::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        m
    }
}

/// Row-reduce a copy of `m` modulo a prime p and return (rank, rref rows,
/// pivot columns).  Pivoting always picks the smallest row/column available,
/// so the output is deterministic.
fn rref_mod_p(m: &IntMat, p: u64) -> (usize, Vec<Vec<u64>>, Vec<usize>) {
    let rows = m.rows_mod(p);
    let (rank, rref, pivots) = rref_rows_mod_p(rows, m.cols, p);
    (rank, rref, pivots)
}

impl IntMat {
    fn rows_mod(&self, p: u64) -> Vec<Vec<u64>> {
        let pi = p as i128;
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| (((self.get(r, c) % pi) + pi) % pi) as u64)
                    .collect()
            })
            .collect()
    }

    pub fn rank_mod_p(&self, p: u64) -> usize {
        rref_mod_p(self, p).0
    }

    /// Deterministic kernel basis over F_p: one vector per free column, unit
    /// at the free index, in increasing free-column order.
    pub fn kernel_basis_mod_p(&self, p: u64) -> Vec<Vec<u64>> {
        let (_, rref, pivots) = rref_mod_p(self, p);
        kernel_from_rref(&rref, &pivots, self.cols, p)
    }
}

pub(crate) fn rref_rows_mod_p(
    mut rows: Vec<Vec<u64>>,
    cols: usize,
    p: u64,
) -> (usize, Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(sel) = (pivot_row..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = crate::modular::inv_mod(rows[pivot_row][col] % p, p)
            .expect("pivot is nonzero mod prime");
        for v in rows[pivot_row].iter_mut() {
            *v = (*v as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] % p != 0 {
                let f = rows[r][col] % p;
                for c in 0..cols {
                    let sub = (rows[pivot_row][c] as u128 * f as u128 % p as u128) as u64;
                    rows[r][c] = (rows[r][c] + p - sub % p) % p;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    (pivots.len(), rows, pivots)
}

pub(crate) fn kernel_from_rref(
    rref: &[Vec<u64>],
    pivots: &[usize],
    cols: usize,
    p: u64,
) -> Vec<Vec<u64>> {
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            // pivot entry is 1, so the pivot variable is minus the free entry
            v[pc] = (p - rref[row][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}
