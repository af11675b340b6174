use crate::error::{Error, Result};
use crate::matrix::IntMat;
use num_integer::Integer;

/// Smith normal form U * A * V = diag(d_1, ..., d_k, 0, ...) with
/// d_i >= 0 and d_i | d_{i+1}.  U and V are unimodular; V's inverse is
/// tracked alongside so lattice coordinates can be recovered exactly.
#[derive(Debug, Clone)]
pub struct Smith {
    pub diag: Vec<i128>,
    pub rank: usize,
    pub u: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow {
        context: "smith normal form",
    })
}

fn checked_sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow {
        context: "smith normal form",
    })
}

pub fn smith(a: &IntMat) -> Result<Smith> {
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut v_inv = IntMat::identity(cols);

    // row_j -= q * row_i on m and u
    let row_op = |m: &mut IntMat, u: &mut IntMat, j: usize, i: usize, q: i128| -> Result<()> {
        for c in 0..m.cols() {
            let val = checked_sub(m.get(j, c), checked_mul(q, m.get(i, c))?)?;
            m.set(j, c, val);
        }
        for c in 0..u.cols() {
            let val = checked_sub(u.get(j, c), checked_mul(q, u.get(i, c))?)?;
            u.set(j, c, val);
        }
        Ok(())
    };
    // col_j -= q * col_i on m and v; inverse op on v_inv is row_i += q * row_j
    let col_op = |m: &mut IntMat,
                  v: &mut IntMat,
                  v_inv: &mut IntMat,
                  j: usize,
                  i: usize,
                  q: i128|
     -> Result<()> {
        for r in 0..m.rows() {
            let val = checked_sub(m.get(r, j), checked_mul(q, m.get(r, i))?)?;
            m.set(r, j, val);
        }
        for r in 0..v.rows() {
            let val = checked_sub(v.get(r, j), checked_mul(q, v.get(r, i))?)?;
            v.set(r, j, val);
        }
        for c in 0..v_inv.cols() {
            let val = v_inv
                .get(i, c)
                .checked_add(checked_mul(q, v_inv.get(j, c))?)
                .ok_or(Error::Overflow {
                    context: "smith normal form",
                })?;
            v_inv.set(i, c, val);
        }
        Ok(())
    };
    let swap_rows = |m: &mut IntMat, u: &mut IntMat, i: usize, j: usize| {
        for c in 0..m.cols() {
            let (a, b) = (m.get(i, c), m.get(j, c));
            m.set(i, c, b);
            m.set(j, c, a);
        }
        for c in 0..u.cols() {
            let (a, b) = (u.get(i, c), u.get(j, c));
            u.set(i, c, b);
            u.set(j, c, a);
        }
    };
    let swap_cols = |m: &mut IntMat, v: &mut IntMat, v_inv: &mut IntMat, i: usize, j: usize| {
        for r in 0..m.rows() {
            let (a, b) = (m.get(r, i), m.get(r, j));
            m.set(r, i, b);
            m.set(r, j, a);
        }
        for r in 0..v.rows() {
            let (a, b) = (v.get(r, i), v.get(r, j));
            v.set(r, i, b);
            v.set(r, j, a);
        }
        for c in 0..v_inv.cols() {
            let (a, b) = (v_inv.get(i, c), v_inv.get(j, c));
            v_inv.set(i, c, b);
            v_inv.set(j, c, a);
        }
    };

    let dim = rows.min(cols);
    let mut t = 0usize;
    while t < dim {
        // pick the nonzero entry of smallest magnitude in the trailing block
        let mut best: Option<(usize, usize, i128)> = None;
        for r in t..rows {
            for c in t..cols {
                let val = m.get(r, c);
                if val != 0 && best.map_or(true, |(_, _, b)| val.abs() < b.abs()) {
                    best = Some((r, c, val));
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        if pr != t {
            swap_rows(&mut m, &mut u, t, pr);
        }
        if pc != t {
            swap_cols(&mut m, &mut v, &mut v_inv, t, pc);
        }

        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if m.get(r, t) != 0 {
                    let q = m.get(r, t).div_euclid(m.get(t, t));
                    row_op(&mut m, &mut u, r, t, q)?;
                    if m.get(r, t) != 0 {
                        // remainder is smaller than the pivot; promote it
                        swap_rows(&mut m, &mut u, t, r);
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                if m.get(t, c) != 0 {
                    let q = m.get(t, c).div_euclid(m.get(t, t));
                    col_op(&mut m, &mut v, &mut v_inv, c, t, q)?;
                    if m.get(t, c) != 0 {
                        swap_cols(&mut m, &mut v, &mut v_inv, t, c);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every entry of the trailing block
            let pivot = m.get(t, t);
            let mut fixed = true;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if m.get(r, c) % pivot != 0 {
                        // fold the offending row into the pivot row
                        row_op(&mut m, &mut u, t, r, -1)?;
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }

        if m.get(t, t) < 0 {
            // negate the pivot column
            for r in 0..rows {
                m.set(r, t, -m.get(r, t));
            }
            for r in 0..cols {
                v.set(r, t, -v.get(r, t));
            }
            for c in 0..cols {
                v_inv.set(t, c, -v_inv.get(t, c));
            }
        }
        t += 1;
    }

    let mut diag: Vec<i128> = (0..dim).map(|i| m.get(i, i)).collect();
    diag.resize(dim, 0);
    let rank = diag.iter().filter(|&&d| d != 0).count();
    Ok(Smith {
        diag,
        rank,
        u,
        v,
        v_inv,
    })
}

/// The lattice L = { x in Z^c : A x = 0 mod n }, presented by a square
/// basis matrix.  Column i is m_i * V_i where V is the SNF column transform
/// and m_i = n / gcd(d_i, n); columns past the rank are the integer kernel.
#[derive(Debug, Clone)]
pub struct KernelLattice {
    pub basis: IntMat,
    pub scale: Vec<i128>,
    v_inv: IntMat,
}

pub fn kernel_lattice_mod_n(a: &IntMat, n: u64) -> Result<KernelLattice> {
    let s = smith(a)?;
    let cols = a.cols();
    let n = n as i128;
    let mut scale = vec![1i128; cols];
    for i in 0..cols {
        if i < s.diag.len() && s.diag[i] != 0 {
            scale[i] = n / s.diag[i].gcd(&n);
        }
    }
    let mut basis = IntMat::zero(cols, cols);
    for j in 0..cols {
        for r in 0..cols {
            basis.set(r, j, checked_mul(s.v.get(r, j), scale[j])?);
        }
    }
    Ok(KernelLattice {
        basis,
        scale,
        v_inv: s.v_inv,
    })
}

impl KernelLattice {
    /// Reduced, deduplicated generators of the kernel as a Z/n module.
    pub fn generators_mod_n(&self, n: u64) -> Vec<Vec<u64>> {
        let m = n as i128;
        let mut out: Vec<Vec<u64>> = Vec::new();
        for j in 0..self.basis.cols() {
            let v: Vec<u64> = (0..self.basis.rows())
                .map(|r| (((self.basis.get(r, j) % m) + m) % m) as u64)
                .collect();
            if v.iter().any(|&x| x != 0) && !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Coordinates of `cols` (columns lying in the lattice) in this basis.
    /// Panics if a column is not actually in the lattice; callers only pass
    /// vectors that are provably inside.
    pub fn express(&self, cols: &IntMat) -> IntMat {
        let w = mat_mul(&self.v_inv, cols);
        let mut out = IntMat::zero(w.rows(), w.cols());
        for r in 0..w.rows() {
            for c in 0..w.cols() {
                let val = w.get(r, c);
                assert_eq!(
                    val % self.scale[r],
                    0,
                    "column not in kernel lattice (row {r})"
                );
                out.set(r, c, val / self.scale[r]);
            }
        }
        out
    }
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    assert_eq!(a.cols(), b.rows());
    let mut out = IntMat::zero(a.rows(), b.cols());
    for r in 0..a.rows() {
        for c in 0..b.cols() {
            let mut acc: i128 = 0;
            for k in 0..a.cols() {
                acc = acc
                    .checked_add(
                        a.get(r, k)
                            .checked_mul(b.get(k, c))
                            .expect("mat_mul overflow"),
                    )
                    .expect("mat_mul overflow");
            }
            out.set(r, c, acc);
        }
    }
    out
}

/// Elementary divisors (> 1) of the cokernel Z^c / im(rel), assuming the
/// cokernel is finite.  Divisors come out in SNF order, each dividing the
/// next.
pub fn cokernel_divisors(rel: &IntMat) -> Result<Vec<u64>> {
    let s = smith(rel)?;
    let mut out = Vec::new();
    for i in 0..rel.rows() {
        let d = if i < s.diag.len() { s.diag[i] } else { 0 };
        assert!(d != 0, "cokernel is not finite");
        if d > 1 {
            out.push(d as u64);
        }
    }
    Ok(out)
}
