use crate::error::{Error, Result};
use crate::matrix::IntMat;
use crate::modular::CoefficientModule;
use crate::perm::Perm;
use crate::snf::{cokernel_divisors, kernel_lattice_mod_n};
use crate::yb::{StructureClass, TwistedYBSet, YBOperator};

/// How the twist enters the complex.
///
/// * `Coordinate`: faces apply the twist powers f^{m1}, f^{m2} directly to
///   the surviving entries of a tuple; coefficients are plain integers.
/// * `Scalar`: tuples are left untouched and every left face carries a
///   formal weight T^{m1}, every right face T^{m2}, realized on coefficients
///   through the distinguished unit of the module.
///
/// The two presentations expand to the same cocycle conditions and have
/// isomorphic (co)homology; both are kept because each makes a different
/// family of statements directly checkable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistMode {
    Coordinate,
    Scalar,
}

/// Which complex: the full one, its degenerate subcomplex, or the quotient
/// by the degenerate part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// All tuples.
    Tyb,
    /// Only degenerate tuples (a subcomplex; closure is checked).
    Td,
    /// Quotient by the degenerate subcomplex: non-degenerate tuples.
    Tbq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistParams {
    /// Power of the twist baked into the operator used by all faces.
    pub t: i64,
    /// Left-face twist exponent.
    pub m1: i64,
    /// Right-face twist exponent.
    pub m2: i64,
    pub mode: TwistMode,
    pub variant: Variant,
}

impl TwistParams {
    pub fn coordinate(t: i64, m1: i64, m2: i64, variant: Variant) -> Self {
        TwistParams {
            t,
            m1,
            m2,
            mode: TwistMode::Coordinate,
            variant,
        }
    }

    pub fn scalar(t: i64, m1: i64, m2: i64, variant: Variant) -> Self {
        TwistParams {
            t,
            m1,
            m2,
            mode: TwistMode::Scalar,
            variant,
        }
    }
}

/// One summand of a boundary: `coeff * T^exp * tuple`.  In coordinate mode
/// `exp` is always 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTerm {
    pub tuple: Vec<usize>,
    pub coeff: i64,
    pub exp: i64,
}

/// A finite Z[T, T^{-1}]-combination of tuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalChain {
    pub terms: Vec<ChainTerm>,
}

impl FormalChain {
    /// Merge equal (tuple, exponent) summands, drop zeros, sort.  Exponents
    /// are compared exactly, so cancellation here is cancellation over the
    /// Laurent polynomial ring, independent of any particular module.
    pub fn collect(&self) -> FormalChain {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.tuple.cmp(&b.tuple).then(a.exp.cmp(&b.exp)));
        let mut out: Vec<ChainTerm> = Vec::new();
        for term in terms {
            match out.last_mut() {
                Some(last) if last.tuple == term.tuple && last.exp == term.exp => {
                    last.coeff += term.coeff;
                    if last.coeff == 0 {
                        out.pop();
                    }
                }
                _ => out.push(term),
            }
        }
        FormalChain { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.collect().terms.is_empty()
    }
}

/// Lexicographic rank of a tuple over {0, ..., size-1}.
pub fn tuple_rank(size: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * size + x)
}

pub fn tuple_unrank(size: usize, arity: usize, mut rank: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = rank % size;
        rank /= size;
    }
    out
}

pub fn tuple_count(size: usize, arity: usize) -> usize {
    size.pow(arity as u32)
}

/// Everything the face maps need, precomputed once: the operator actually
/// used at crossings (the t-th twisted operator) and the twist powers
/// applied by coordinate-mode faces.
pub struct FaceCtx {
    tw: TwistedYBSet,
    params: TwistParams,
    q: YBOperator,
    fm1: Perm,
    fm2: Perm,
}

impl FaceCtx {
    pub fn new(tw: &TwistedYBSet, params: TwistParams) -> Result<Self> {
        tw.op().verify_ybe()?;
        let q = tw.twisted_operator(params.t);
        if matches!(params.variant, Variant::Tbq | Variant::Td) {
            let class = q.classify()?;
            if class != StructureClass::Biquandle {
                return Err(Error::RequiresBiquandle {
                    found: match class {
                        StructureClass::YangBaxterSet => "yang-baxter set",
                        StructureClass::Birack => "birack",
                        StructureClass::Biquandle => unreachable!(),
                    },
                });
            }
        }
        Ok(FaceCtx {
            fm1: tw.twist().pow(params.m1),
            fm2: tw.twist().pow(params.m2),
            q,
            params,
            tw: tw.clone(),
        })
    }

    pub fn size(&self) -> usize {
        self.tw.size()
    }

    pub fn params(&self) -> TwistParams {
        self.params
    }

    pub fn set(&self) -> &TwistedYBSet {
        &self.tw
    }

    /// The operator evaluated at every crossing of a face.
    pub fn operator(&self) -> &YBOperator {
        &self.q
    }

    /// Strand i (1-based) walks left across strands i-1, ..., 1 and falls
    /// off.  At each crossing the pair (stationary, mover) maps through the
    /// operator: the mover continues as the first component, the stationary
    /// strand is replaced by the second.
    pub fn face_left(&self, tuple: &[usize], i: usize) -> ChainTerm {
        debug_assert!(1 <= i && i <= tuple.len());
        let mut vals = tuple.to_vec();
        let mut mover = vals[i - 1];
        for j in (0..i - 1).rev() {
            let s = vals[j];
            let (m2, s2) = (self.q.r1(s, mover), self.q.r2(s, mover));
            vals[j] = s2;
            mover = m2;
        }
        vals.remove(i - 1);
        match self.params.mode {
            TwistMode::Coordinate => {
                for v in vals.iter_mut() {
                    *v = self.fm1.apply(*v);
                }
                ChainTerm {
                    tuple: vals,
                    coeff: 1,
                    exp: 0,
                }
            }
            TwistMode::Scalar => ChainTerm {
                tuple: vals,
                coeff: 1,
                exp: self.params.m1,
            },
        }
    }

    /// Strand i walks right across strands i+1, ..., n.  The stationary
    /// strand is replaced by the first component, the mover continues as
    /// the second.
    pub fn face_right(&self, tuple: &[usize], i: usize) -> ChainTerm {
        debug_assert!(1 <= i && i <= tuple.len());
        let mut vals = tuple.to_vec();
        let mut mover = vals[i - 1];
        for j in i..vals.len() {
            let s = vals[j];
            let (s2, m2) = (self.q.r1(mover, s), self.q.r2(mover, s));
            vals[j] = s2;
            mover = m2;
        }
        vals.remove(i - 1);
        match self.params.mode {
            TwistMode::Coordinate => {
                for v in vals.iter_mut() {
                    *v = self.fm2.apply(*v);
                }
                ChainTerm {
                    tuple: vals,
                    coeff: 1,
                    exp: 0,
                }
            }
            TwistMode::Scalar => ChainTerm {
                tuple: vals,
                coeff: 1,
                exp: self.params.m2,
            },
        }
    }

    /// The full boundary: sum over i of (-1)^i (left_i - right_i).
    pub fn boundary(&self, tuple: &[usize]) -> FormalChain {
        let mut terms = Vec::with_capacity(2 * tuple.len());
        for i in 1..=tuple.len() {
            let sign = if i % 2 == 1 { -1 } else { 1 };
            let mut left = self.face_left(tuple, i);
            left.coeff *= sign;
            let mut right = self.face_right(tuple, i);
            right.coeff *= -sign;
            terms.push(left);
            terms.push(right);
        }
        FormalChain { terms }
    }

    /// Boundary followed by boundary, fully expanded (exponents add).
    pub fn double_boundary(&self, tuple: &[usize]) -> FormalChain {
        let first = self.boundary(tuple);
        let mut terms = Vec::new();
        for t1 in &first.terms {
            if t1.tuple.is_empty() {
                continue;
            }
            let second = self.boundary(&t1.tuple);
            for t2 in &second.terms {
                terms.push(ChainTerm {
                    tuple: t2.tuple.clone(),
                    coeff: t1.coeff * t2.coeff,
                    exp: t1.exp + t2.exp,
                });
            }
        }
        FormalChain { terms }
    }

    /// A tuple is degenerate when some adjacent pair is fixed by the
    /// operator.
    pub fn is_degenerate(&self, tuple: &[usize]) -> bool {
        tuple
            .windows(2)
            .any(|w| self.q.apply(w[0], w[1]) == (w[0], w[1]))
    }

    /// Does this tuple index a basis chain of the chosen variant?
    pub fn in_variant(&self, tuple: &[usize]) -> bool {
        match self.params.variant {
            Variant::Tyb => true,
            Variant::Td => self.is_degenerate(tuple),
            Variant::Tbq => !self.is_degenerate(tuple),
        }
    }

    /// Tuple ranks of the degree-n basis of the chosen variant, ascending.
    pub fn basis_ranks(&self, degree: usize) -> Vec<usize> {
        let size = self.size();
        (0..tuple_count(size, degree))
            .filter(|&r| self.in_variant(&tuple_unrank(size, degree, r)))
            .collect()
    }
}

/// Verifies the face exchange relations d_i^a d_j^b = d_{j-1}^b d_i^a for
/// all i < j and both side choices, on every tuple of the given arity.
/// Returns the first violation.
pub fn precubical_witness(
    ctx: &FaceCtx,
    arity: usize,
) -> Option<(Vec<usize>, usize, usize, &'static str)> {
    let size = ctx.size();
    let sides: [(&'static str, fn(&FaceCtx, &[usize], usize) -> ChainTerm); 2] =
        [("left", FaceCtx::face_left), ("right", FaceCtx::face_right)];
    for rank in 0..tuple_count(size, arity) {
        let tuple = tuple_unrank(size, arity, rank);
        for i in 1..arity {
            for j in i + 1..=arity {
                for (na, fa) in sides.iter() {
                    for (nb, fb) in sides.iter() {
                        let inner = fb(ctx, &tuple, j);
                        let lhs = fa(ctx, &inner.tuple, i);
                        let lhs_exp = inner.exp + lhs.exp;
                        let inner2 = fa(ctx, &tuple, i);
                        let rhs = fb(ctx, &inner2.tuple, j - 1);
                        let rhs_exp = inner2.exp + rhs.exp;
                        if lhs.tuple != rhs.tuple || lhs_exp != rhs_exp {
                            let combo: &'static str = match (*na, *nb) {
                                ("left", "left") => "left/left",
                                ("left", "right") => "left/right",
                                ("right", "left") => "right/left",
                                _ => "right/right",
                            };
                            return Some((tuple, i, j, combo));
                        }
                    }
                }
            }
        }
    }
    None
}

/// First tuple whose double boundary fails to cancel formally, if any.
pub fn double_boundary_witness(ctx: &FaceCtx, arity: usize) -> Option<Vec<usize>> {
    let size = ctx.size();
    (0..tuple_count(size, arity))
        .map(|r| tuple_unrank(size, arity, r))
        .find(|t| !ctx.double_boundary(t).is_zero())
}

/// First degenerate tuple whose collected boundary leaves the degenerate
/// span, if any.  This is the closure property that makes the degenerate
/// tuples a subcomplex and the quotient well defined.
pub fn degenerate_closure_witness(ctx: &FaceCtx, arity: usize) -> Option<Vec<usize>> {
    let size = ctx.size();
    for rank in 0..tuple_count(size, arity) {
        let tuple = tuple_unrank(size, arity, rank);
        if !ctx.is_degenerate(&tuple) {
            continue;
        }
        let b = ctx.boundary(&tuple).collect();
        if b.terms.iter().any(|t| !ctx.is_degenerate(&t.tuple)) {
            return Some(tuple);
        }
    }
    None
}

/// A map X^degree -> Z/N, stored densely over the full tuple space in
/// lexicographic order.  Variant restrictions are support conditions, not a
/// different storage layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub size: usize,
    pub values: Vec<u64>,
}

impl Cochain {
    pub fn zero(size: usize, degree: usize) -> Self {
        Cochain {
            degree,
            size,
            values: vec![0; tuple_count(size, degree)],
        }
    }

    pub fn get(&self, tuple: &[usize]) -> u64 {
        self.values[tuple_rank(self.size, tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], v: u64) {
        self.values[tuple_rank(self.size, tuple)] = v;
    }

    /// Nonzero entries as (tuple, value), in lexicographic tuple order.
    pub fn support(&self) -> Vec<(Vec<usize>, u64)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(r, &v)| (tuple_unrank(self.size, self.degree, r), v))
            .collect()
    }
}

/// The matrix of the coboundary delta: C^degree -> C^{degree+1} for the
/// chosen variant.  Columns are indexed by `col_ranks` (degree-tuples in
/// the variant), rows by `row_ranks` (degree+1).  Entries are exact
/// integers: each face contributes coeff * lift(u^exp).
pub struct DeltaMatrix {
    pub degree: usize,
    pub col_ranks: Vec<usize>,
    pub row_ranks: Vec<usize>,
    pub mat: IntMat,
}

pub const DEFAULT_SIZE_GUARD: usize = 50_000;

pub fn delta_matrix(
    ctx: &FaceCtx,
    degree: usize,
    module: &CoefficientModule,
    guard: usize,
) -> Result<DeltaMatrix> {
    let size = ctx.size();
    let upper = tuple_count(size, degree + 1);
    if upper > guard {
        return Err(Error::SizeGuard { size: upper, guard });
    }
    let col_ranks = ctx.basis_ranks(degree);
    let row_ranks = ctx.basis_ranks(degree + 1);
    let col_pos: std::collections::HashMap<usize, usize> = col_ranks
        .iter()
        .enumerate()
        .map(|(pos, &r)| (r, pos))
        .collect();
    let mut mat = IntMat::zero(row_ranks.len(), col_ranks.len());
    for (row, &rrank) in row_ranks.iter().enumerate() {
        let tuple = tuple_unrank(size, degree + 1, rrank);
        for term in ctx.boundary(&tuple).terms {
            // variant projection: terms outside the basis are quotiented
            // away (Tbq) or provably absent (Td, by closure)
            let Some(&col) = col_pos.get(&tuple_rank(size, &term.tuple)) else {
                continue;
            };
            let weight = module.unit_pow(term.exp) as i128;
            mat.add_to(row, col, term.coeff as i128 * weight);
        }
    }
    Ok(DeltaMatrix {
        degree,
        col_ranks,
        row_ranks,
        mat,
    })
}

/// delta(phi) evaluated directly through the faces, without assembling a
/// matrix.  Entries on tuples outside the variant are left at zero.
pub fn evaluate_delta(ctx: &FaceCtx, phi: &Cochain, module: &CoefficientModule) -> Cochain {
    let size = ctx.size();
    let mut out = Cochain::zero(size, phi.degree + 1);
    for rank in 0..tuple_count(size, phi.degree + 1) {
        let tuple = tuple_unrank(size, phi.degree + 1, rank);
        if !ctx.in_variant(&tuple) {
            continue;
        }
        let mut acc: i128 = 0;
        for term in ctx.boundary(&tuple).terms {
            if !ctx.in_variant(&term.tuple) {
                continue;
            }
            let w = module.unit_pow(term.exp) as i128;
            acc += term.coeff as i128 * w * phi.get(&term.tuple) as i128;
        }
        out.values[rank] = module.reduce(acc);
    }
    out
}

/// Is phi a valid cochain of the variant (support condition) and a cocycle
/// (delta phi = 0)?
pub fn cocycle_check(ctx: &FaceCtx, phi: &Cochain, module: &CoefficientModule) -> Result<()> {
    let size = ctx.size();
    if phi.size != size {
        return Err(Error::SizeMismatch {
            a: phi.size,
            b: size,
        });
    }
    for rank in 0..tuple_count(size, phi.degree) {
        let tuple = tuple_unrank(size, phi.degree, rank);
        if !ctx.in_variant(&tuple) && phi.values[rank] % module.modulus() != 0 {
            return Err(Error::DegenerateSupport { tuple });
        }
    }
    let image = evaluate_delta(ctx, phi, module);
    for rank in 0..image.values.len() {
        if image.values[rank] != 0 {
            return Err(Error::NotCocycle {
                tuple: tuple_unrank(size, phi.degree + 1, rank),
            });
        }
    }
    Ok(())
}

/// phi(f tau) = u * phi(tau) for every tau: the condition for phi to be a
/// map of Z[T, T^{-1}]-modules.
pub fn is_equivariant(
    tw: &TwistedYBSet,
    phi: &Cochain,
    module: &CoefficientModule,
) -> std::result::Result<(), Vec<usize>> {
    let size = tw.size();
    let f = tw.twist();
    for rank in 0..tuple_count(size, phi.degree) {
        let tuple = tuple_unrank(size, phi.degree, rank);
        let image: Vec<usize> = tuple.iter().map(|&x| f.apply(x)).collect();
        let lhs = phi.get(&image);
        let rhs = module.act(1, phi.get(&tuple));
        if lhs != rhs {
            return Err(tuple);
        }
    }
    Ok(())
}

/// A computed space of cocycles.  For prime moduli `dim` is the dimension
/// and `basis` a basis; for composite moduli `dim` is None and `basis` is a
/// generating set of the kernel as a Z/N-module.
#[derive(Debug, Clone)]
pub struct CocycleSpace {
    pub degree: usize,
    pub dim: Option<usize>,
    pub basis: Vec<Cochain>,
}

fn expand_vector(size: usize, degree: usize, col_ranks: &[usize], packed: &[u64]) -> Cochain {
    let mut c = Cochain::zero(size, degree);
    for (pos, &rank) in col_ranks.iter().enumerate() {
        c.values[rank] = packed[pos];
    }
    c
}

/// Rows expressing equivariance of a degree-n cochain: phi(f tau) - u
/// phi(tau) = 0, one row per basis tuple.
fn equivariance_rows(
    ctx: &FaceCtx,
    degree: usize,
    module: &CoefficientModule,
    col_ranks: &[usize],
) -> IntMat {
    let size = ctx.size();
    let f = ctx.set().twist();
    let col_pos: std::collections::HashMap<usize, usize> = col_ranks
        .iter()
        .enumerate()
        .map(|(pos, &r)| (r, pos))
        .collect();
    let mut mat = IntMat::zero(col_ranks.len(), col_ranks.len());
    for (row, &rank) in col_ranks.iter().enumerate() {
        let tuple = tuple_unrank(size, degree, rank);
        let image: Vec<usize> = tuple.iter().map(|&x| f.apply(x)).collect();
        let image_rank = tuple_rank(size, &image);
        let image_col = col_pos[&image_rank];
        mat.add_to(row, image_col, 1);
        mat.add_to(row, col_pos[&rank], -(module.unit_pow(1) as i128));
    }
    mat
}

pub fn cocycle_space(
    ctx: &FaceCtx,
    degree: usize,
    module: &CoefficientModule,
    equivariant: bool,
    guard: usize,
) -> Result<CocycleSpace> {
    let size = ctx.size();
    let delta = delta_matrix(ctx, degree, module, guard)?;
    let system = if equivariant {
        let eq = equivariance_rows(ctx, degree, module, &delta.col_ranks);
        stack(&delta.mat, &eq)
    } else {
        delta.mat.clone()
    };
    let n = module.modulus();
    if module.is_prime_modulus() {
        let kernel = system.kernel_basis_mod_p(n);
        let dim = kernel.len();
        let basis = kernel
            .into_iter()
            .map(|v| expand_vector(size, degree, &delta.col_ranks, &v))
            .collect();
        Ok(CocycleSpace {
            degree,
            dim: Some(dim),
            basis,
        })
    } else {
        let lattice = kernel_lattice_mod_n(&system, n)?;
        let basis = lattice
            .generators_mod_n(n)
            .into_iter()
            .map(|v| expand_vector(size, degree, &delta.col_ranks, &v))
            .collect();
        Ok(CocycleSpace {
            degree,
            dim: None,
            basis,
        })
    }
}

fn stack(top: &IntMat, bottom: &IntMat) -> IntMat {
    assert_eq!(top.cols(), bottom.cols());
    let mut out = IntMat::zero(top.rows() + bottom.rows(), top.cols());
    for r in 0..top.rows() {
        for c in 0..top.cols() {
            out.set(r, c, top.get(r, c));
        }
    }
    for r in 0..bottom.rows() {
        for c in 0..bottom.cols() {
            out.set(top.rows() + r, c, bottom.get(r, c));
        }
    }
    out
}

fn transpose(m: &IntMat) -> IntMat {
    let mut out = IntMat::zero(m.cols(), m.rows());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(c, r, m.get(r, c));
        }
    }
    out
}

/// Size of one cohomology (or homology) group: dimensions over a prime
/// field, elementary divisors over any modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSummary {
    /// Generators of the kernel found (basis size for prime moduli).
    pub kernel_generators: usize,
    /// dim ker for prime moduli.
    pub kernel_dim: Option<usize>,
    /// rank of the incoming map for prime moduli.
    pub image_rank: Option<usize>,
    /// kernel_dim - image_rank, prime moduli only.
    pub betti: Option<usize>,
    /// Elementary divisors (> 1) of the quotient, any modulus.
    pub divisors: Vec<u64>,
}

/// ker(out) / im(inc) where `out` consumes the middle space and `inc` feeds
/// it.  Both matrices share their middle index space of dimension `dim_mid`.
fn quotient_summary(
    out: &IntMat,
    inc: &IntMat,
    dim_mid: usize,
    module: &CoefficientModule,
) -> Result<QuotientSummary> {
    assert_eq!(out.cols(), dim_mid);
    assert_eq!(inc.rows(), dim_mid);
    let n = module.modulus();
    let lattice = kernel_lattice_mod_n(out, n)?;
    let kernel_generators = lattice.generators_mod_n(n).len();
    // relations: image generators plus N times the ambient basis, expressed
    // in lattice coordinates
    let scaled_identity = {
        let mut m = IntMat::identity(dim_mid);
        for i in 0..dim_mid {
            m.set(i, i, n as i128);
        }
        m
    };
    let rel = lattice.express(&inc.hcat(&scaled_identity));
    let divisors = cokernel_divisors(&rel)?;
    let (kernel_dim, image_rank, betti) = if module.is_prime_modulus() {
        let kd = out.cols() - out.rank_mod_p(n);
        let ir = inc.rank_mod_p(n);
        (Some(kd), Some(ir), Some(kd - ir))
    } else {
        (None, None, None)
    };
    Ok(QuotientSummary {
        kernel_generators,
        kernel_dim,
        image_rank,
        betti,
        divisors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degree: usize,
    pub cohomology: QuotientSummary,
    pub homology: QuotientSummary,
}

/// Cohomology and homology of the chosen complex in degrees 1..=max_degree.
/// Degree n touches tuple spaces up to arity n+1, which is what the guard
/// is measured against.
pub fn homology_summary(
    ctx: &FaceCtx,
    module: &CoefficientModule,
    max_degree: usize,
    guard: usize,
) -> Result<Vec<DegreeSummary>> {
    let mut out = Vec::new();
    for degree in 1..=max_degree {
        let dim_mid = ctx.basis_ranks(degree).len();
        let up = delta_matrix(ctx, degree, module, guard)?;
        let down = if degree >= 2 {
            delta_matrix(ctx, degree - 1, module, guard)?.mat
        } else {
            IntMat::zero(dim_mid, 0)
        };
        let cohomology = quotient_summary(&up.mat, &down, dim_mid, module)?;
        // chain side: boundary_n = transpose of delta_{n-1}, boundary_{n+1}
        // = transpose of delta_n
        let bd_n = transpose(&down);
        let bd_up = transpose(&up.mat);
        let homology = quotient_summary(&bd_n, &bd_up, dim_mid, module)?;
        out.push(DegreeSummary {
            degree,
            cohomology,
            homology,
        });
    }
    Ok(out)
}

/// Betti numbers (prime moduli only; composite moduli get a steering
/// error pointing at the divisor report).
pub fn betti_numbers(
    ctx: &FaceCtx,
    module: &CoefficientModule,
    max_degree: usize,
    guard: usize,
) -> Result<Vec<(usize, usize, usize)>> {
    if !module.is_prime_modulus() {
        return Err(Error::NonPrimeBetti {
            modulus: module.modulus(),
        });
    }
    let summary = homology_summary(ctx, module, max_degree, guard)?;
    Ok(summary
        .iter()
        .map(|s| {
            (
                s.degree,
                s.cohomology.betti.expect("prime modulus"),
                s.homology.betti.expect("prime modulus"),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yb::{cyclic_operator, dihedral_operator, fixture_corpus};

    fn cyclic3_shift1() -> TwistedYBSet {
        TwistedYBSet::new(cyclic_operator(3), Perm::new(vec![1, 2, 0]).unwrap()).unwrap()
    }

    fn untwisted(op: YBOperator) -> TwistedYBSet {
        TwistedYBSet::untwisted(op)
    }

    #[test]
    fn scalar_two_cocycle_condition_matches_written_form() {
        // the degree-2 coboundary in scalar mode with (m1, m2) = (0, m)
        // must expand, term for term, to the six-term condition
        //   u^m phi(R1(x1,x2), R1(R2(x1,x2),x3)) + phi(R2(x1,x2),x3)
        //     + u^m phi(x1,x2)
        //   = phi(x2,x3) + u^m phi(x1,R1(x2,x3))
        //     + phi(R2(x1,R1(x2,x3)), R2(x2,x3))
        let m = 1i64;
        let module = CoefficientModule::new(5, 2).unwrap();
        for tw in [
            untwisted(dihedral_operator(3)),
            untwisted(cyclic_operator(4)),
        ] {
            let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, m, Variant::Tyb)).unwrap();
            let r = tw.op().clone();
            let size = tw.size();
            let um = module.unit_pow(m);
            // evaluate on every basis cochain and every triple
            for basis_rank in 0..tuple_count(size, 2) {
                let mut phi = Cochain::zero(size, 2);
                phi.values[basis_rank] = 1;
                let image = evaluate_delta(&ctx, &phi, &module);
                for rank in 0..tuple_count(size, 3) {
                    let t = tuple_unrank(size, 3, rank);
                    let (x1, x2, x3) = (t[0], t[1], t[2]);
                    let p = |a: usize, b: usize| phi.get(&[a, b]) as i128;
                    let lhs = um as i128 * p(r.r1(x1, x2), r.r1(r.r2(x1, x2), x3))
                        + p(r.r2(x1, x2), x3)
                        + um as i128 * p(x1, x2);
                    let rhs = p(x2, x3)
                        + um as i128 * p(x1, r.r1(x2, x3))
                        + p(r.r2(x1, r.r1(x2, x3)), r.r2(x2, x3));
                    assert_eq!(
                        image.values[rank],
                        module.reduce(lhs - rhs),
                        "tuple {t:?}, basis {basis_rank}"
                    );
                }
            }
        }
    }

    #[test]
    fn scalar_one_cocycle_condition_matches_written_form() {
        // degree-1, (m1, m2) = (0, m):
        //   -eta(x2) + u^m eta(R1(x1,x2)) + eta(R2(x1,x2)) - u^m eta(x1)
        let m = 2i64;
        let module = CoefficientModule::new(7, 3).unwrap();
        let tw = cyclic3_shift1();
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, m, Variant::Tyb)).unwrap();
        let r = tw.op().clone();
        let um = module.unit_pow(m) as i128;
        for v in 0..3usize {
            let mut eta = Cochain::zero(3, 1);
            eta.values[v] = 1;
            let image = evaluate_delta(&ctx, &eta, &module);
            for x1 in 0..3usize {
                for x2 in 0..3usize {
                    let e = |a: usize| eta.get(&[a]) as i128;
                    let expect = -e(x2) + um * e(r.r1(x1, x2)) + e(r.r2(x1, x2)) - um * e(x1);
                    assert_eq!(
                        image.get(&[x1, x2]),
                        module.reduce(expect),
                        "({x1},{x2}) basis {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn coordinate_one_cocycle_condition_matches_written_form() {
        // coordinate mode, (m1, m2) = (0, m): the twist lands inside the
        // arguments instead of on the coefficients:
        //   -eta(x2) + eta(f^m R1(x1,x2)) + eta(R2(x1,x2)) - eta(f^m x1)
        let m = 1i64;
        let module = CoefficientModule::new(5, 1).unwrap();
        let tw = cyclic3_shift1();
        let ctx = FaceCtx::new(&tw, TwistParams::coordinate(0, 0, m, Variant::Tyb)).unwrap();
        let r = tw.op().clone();
        let fm = tw.twist().pow(m);
        for v in 0..3usize {
            let mut eta = Cochain::zero(3, 1);
            eta.values[v] = 1;
            let image = evaluate_delta(&ctx, &eta, &module);
            for x1 in 0..3usize {
                for x2 in 0..3usize {
                    let e = |a: usize| eta.get(&[a]) as i128;
                    let expect =
                        -e(x2) + e(fm.apply(r.r1(x1, x2))) + e(r.r2(x1, x2)) - e(fm.apply(x1));
                    assert_eq!(image.get(&[x1, x2]), module.reduce(expect));
                }
            }
        }
    }

    #[test]
    fn double_boundary_vanishes_formally() {
        for (name, tw) in fixture_corpus().into_iter().step_by(5) {
            for params in [
                TwistParams::scalar(0, 1, 2, Variant::Tyb),
                TwistParams::scalar(1, 0, 1, Variant::Tyb),
                TwistParams::coordinate(0, 1, 2, Variant::Tyb),
                TwistParams::coordinate(1, 2, 0, Variant::Tyb),
            ] {
                let ctx = FaceCtx::new(&tw, params).unwrap();
                for arity in 2..=4 {
                    assert_eq!(
                        double_boundary_witness(&ctx, arity),
                        None,
                        "{name} arity {arity} {params:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn face_exchange_relations_hold() {
        for (name, tw) in fixture_corpus().into_iter().step_by(7) {
            for params in [
                TwistParams::scalar(0, 1, 2, Variant::Tyb),
                TwistParams::coordinate(1, 1, 0, Variant::Tyb),
            ] {
                let ctx = FaceCtx::new(&tw, params).unwrap();
                for arity in 2..=4 {
                    assert_eq!(
                        precubical_witness(&ctx, arity),
                        None,
                        "{name} arity {arity}"
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_tuples_form_a_subcomplex() {
        for (name, tw) in fixture_corpus().into_iter().step_by(4) {
            for params in [
                TwistParams::scalar(0, 0, 1, Variant::Tyb),
                TwistParams::coordinate(0, 1, 1, Variant::Tyb),
            ] {
                let ctx = FaceCtx::new(&tw, params).unwrap();
                for arity in 2..=4 {
                    assert_eq!(
                        degenerate_closure_witness(&ctx, arity),
                        None,
                        "{name} arity {arity}"
                    );
                }
            }
        }
    }

    #[test]
    fn matrix_and_direct_evaluation_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let module = CoefficientModule::new(6, 5).unwrap();
        let tw = cyclic3_shift1();
        for variant in [Variant::Tyb, Variant::Tbq] {
            let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 1, 2, variant)).unwrap();
            for degree in 1..=2usize {
                let dm = delta_matrix(&ctx, degree, &module, DEFAULT_SIZE_GUARD).unwrap();
                for _ in 0..5 {
                    // random cochain supported on the variant basis
                    let mut phi = Cochain::zero(3, degree);
                    let mut packed = Vec::new();
                    for &rank in &dm.col_ranks {
                        let v = rng.gen_range(0..6u64);
                        phi.values[rank] = v;
                        packed.push(v as i128);
                    }
                    let direct = evaluate_delta(&ctx, &phi, &module);
                    let through = dm.mat.mul_vec(&packed);
                    for (row, &rrank) in dm.row_ranks.iter().enumerate() {
                        assert_eq!(
                            module.reduce(through[row]),
                            direct.values[rrank],
                            "variant {variant:?} degree {degree}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn delta_of_delta_is_zero_mod_n() {
        let module = CoefficientModule::new(4, 3).unwrap();
        let tw = untwisted(dihedral_operator(3));
        for variant in [Variant::Tyb, Variant::Tbq, Variant::Td] {
            let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, variant)).unwrap();
            for degree in 1..=2usize {
                let d1 = delta_matrix(&ctx, degree, &module, DEFAULT_SIZE_GUARD).unwrap();
                let d2 = delta_matrix(&ctx, degree + 1, &module, DEFAULT_SIZE_GUARD).unwrap();
                let prod = crate::snf::mat_mul(&d2.mat, &d1.mat);
                let reduced = prod.reduced_mod(module.modulus());
                assert!(
                    reduced.iter().all(|&v| v == 0),
                    "variant {variant:?} degree {degree}"
                );
            }
        }
    }

    #[test]
    fn shifting_both_exponents_scales_the_matrix() {
        // scalar-mode matrices for (m1 + k, m2 + k) equal u^k times those
        // for (m1, m2), entrywise mod N
        let module = CoefficientModule::new(9, 2).unwrap();
        let tw = cyclic3_shift1();
        let k = 2i64;
        for degree in 1..=2usize {
            let base = FaceCtx::new(&tw, TwistParams::scalar(1, 0, 1, Variant::Tyb)).unwrap();
            let shifted =
                FaceCtx::new(&tw, TwistParams::scalar(1, k, 1 + k, Variant::Tyb)).unwrap();
            let a = delta_matrix(&base, degree, &module, DEFAULT_SIZE_GUARD).unwrap();
            let b = delta_matrix(&shifted, degree, &module, DEFAULT_SIZE_GUARD).unwrap();
            let uk = module.unit_pow(k);
            let am = a.mat.reduced_mod(module.modulus());
            let bm = b.mat.reduced_mod(module.modulus());
            for (x, y) in am.iter().zip(bm.iter()) {
                assert_eq!(module.mul(uk, *x), *y);
            }
        }
    }

    #[test]
    fn frozen_quotient_cocycle_dimension() {
        // cyclic solution on Z/2, quotient complex, M = Z/2 with trivial
        // unit: the degree-2 cocycle space has dimension 2 (enumerated by
        // hand from the six-term conditions)
        let tw = untwisted(cyclic_operator(2));
        let module = CoefficientModule::new(2, 1).unwrap();
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tbq)).unwrap();
        let space = cocycle_space(&ctx, 2, &module, false, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(space.dim, Some(2));
        for phi in &space.basis {
            cocycle_check(&ctx, phi, &module).unwrap();
        }
    }

    #[test]
    fn equivariant_space_detects_the_twist() {
        // with the identity twist and u != 1 the equivariance rows force
        // (u - 1) phi = 0, which over a prime field kills everything
        let module = CoefficientModule::new(7, 2).unwrap();
        let plain = untwisted(cyclic_operator(3));
        let ctx = FaceCtx::new(&plain, TwistParams::scalar(0, 0, 1, Variant::Tyb)).unwrap();
        let space = cocycle_space(&ctx, 1, &module, true, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(space.dim, Some(0));

        // with the shift twist on Z/3 and u = 2 mod 7 (order 3 = order of
        // the twist), equivariant 2-cocycles exist.  Writing phi(x, y) =
        // 2^x v_{y-x} and expanding the six boundary terms leaves
        // 2^{p+1} v_q = v_{p+q+1} - v_p, whose solutions are exactly
        // v_2 = 0, v_1 = 3 v_0: a one-dimensional space
        let tw = cyclic3_shift1();
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tyb)).unwrap();
        let space = cocycle_space(&ctx, 2, &module, true, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(space.dim, Some(1));
        for phi in &space.basis {
            cocycle_check(&ctx, phi, &module).unwrap();
            is_equivariant(&tw, phi, &module).expect("basis vector is equivariant");
            assert_eq!(phi.get(&[0, 2]), 0);
            assert_eq!(phi.get(&[0, 1]), module.mul(3, phi.get(&[0, 0])));
        }
    }

    #[test]
    fn composite_modulus_generators_are_cocycles() {
        let module = CoefficientModule::new(6, 1).unwrap();
        let tw = untwisted(dihedral_operator(3));
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tbq)).unwrap();
        let space = cocycle_space(&ctx, 2, &module, false, DEFAULT_SIZE_GUARD).unwrap();
        assert!(space.dim.is_none());
        assert!(!space.basis.is_empty());
        for phi in &space.basis {
            cocycle_check(&ctx, phi, &module).unwrap();
        }
    }

    #[test]
    fn betti_numbers_require_prime_modulus() {
        let tw = untwisted(cyclic_operator(2));
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tyb)).unwrap();
        let composite = CoefficientModule::new(6, 1).unwrap();
        assert!(matches!(
            betti_numbers(&ctx, &composite, 2, DEFAULT_SIZE_GUARD),
            Err(Error::NonPrimeBetti { modulus: 6 })
        ));
        let prime = CoefficientModule::new(3, 1).unwrap();
        let betti = betti_numbers(&ctx, &prime, 2, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(betti.len(), 2);
    }

    #[test]
    fn divisors_match_betti_for_prime_moduli() {
        // over Z/p the divisor list must be exactly betti copies of p
        let module = CoefficientModule::new(3, 1).unwrap();
        let tw = untwisted(dihedral_operator(3));
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tbq)).unwrap();
        for s in homology_summary(&ctx, &module, 2, DEFAULT_SIZE_GUARD).unwrap() {
            for side in [&s.cohomology, &s.homology] {
                let betti = side.betti.unwrap();
                assert_eq!(side.divisors.len(), betti, "degree {}", s.degree);
                assert!(side.divisors.iter().all(|&d| d == 3));
            }
        }
    }

    #[test]
    fn size_guard_trips() {
        let tw = untwisted(cyclic_operator(3));
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tyb)).unwrap();
        let module = CoefficientModule::new(5, 1).unwrap();
        assert!(matches!(
            delta_matrix(&ctx, 3, &module, 10),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn variant_construction_requires_biquandle() {
        let birack = crate::yb::birack_not_biquandle_z2();
        let tw = untwisted(birack);
        assert!(matches!(
            FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tbq)),
            Err(Error::RequiresBiquandle { found: "birack" })
        ));
        assert!(FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tyb)).is_ok());
    }

    #[test]
    fn coordinate_and_scalar_cocycle_dims_agree_untwisted() {
        // with f = id the two presentations produce literally the same
        // matrices when m1 = m2 = 0, and the same dimensions in general
        // for u = 1
        let tw = untwisted(dihedral_operator(3));
        let module = CoefficientModule::new(3, 1).unwrap();
        for degree in 1..=2usize {
            let a = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 1, Variant::Tbq)).unwrap();
            let b = FaceCtx::new(&tw, TwistParams::coordinate(0, 0, 1, Variant::Tbq)).unwrap();
            let sa = cocycle_space(&a, degree, &module, false, DEFAULT_SIZE_GUARD).unwrap();
            let sb = cocycle_space(&b, degree, &module, false, DEFAULT_SIZE_GUARD).unwrap();
            assert_eq!(sa.dim, sb.dim, "degree {degree}");
        }
    }
}
