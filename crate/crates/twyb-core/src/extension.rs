use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::modular::CoefficientModule;
use crate::perm::Perm;
use crate::yb::{TwistedYBSet, YBOperator};

/// Extensions live on the carrier M x X with element (a, x) indexed as
/// a * |X| + x.
pub fn pair_index(size: usize, a: u64, x: usize) -> usize {
    a as usize * size + x
}

pub fn pair_decode(size: usize, idx: usize) -> (u64, usize) {
    ((idx / size) as u64, idx % size)
}

/// The three scalar identities that make the extension a Yang-Baxter
/// solution, named after which coordinate of the triple they govern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionIdentity {
    CFactor,
    BFactor,
    AFactor,
}

/// First triple violating the chosen identity for the weighted cochains
/// A = u^{m1} phi1 and B = u^{m2} phi2, if any.
pub fn extension_identity_witness(
    op: &YBOperator,
    module: &CoefficientModule,
    m1: i64,
    m2: i64,
    phi1: &Cochain,
    phi2: &Cochain,
    which: ExtensionIdentity,
) -> Option<(usize, usize, usize)> {
    let n = op.size();
    let a_of = |x: usize, y: usize| module.act(m1, phi1.get(&[x, y]));
    let b_of = |x: usize, y: usize| module.act(m2, phi2.get(&[x, y]));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (r1xy, r2xy) = op.apply(x, y);
                let r1yz = op.r1(y, z);
                let r2yz = op.r2(y, z);
                let x_r1yz = op.r2(x, r1yz);
                let (lhs, rhs) = match which {
                    ExtensionIdentity::CFactor => (
                        module.add(a_of(r2xy, z), a_of(r1xy, op.r1(r2xy, z))),
                        module.add(a_of(y, z), a_of(x, r1yz)),
                    ),
                    ExtensionIdentity::BFactor => (
                        module.add(a_of(x, y), b_of(r1xy, op.r1(r2xy, z))),
                        module.add(b_of(y, z), a_of(x_r1yz, r2yz)),
                    ),
                    ExtensionIdentity::AFactor => (
                        module.add(b_of(x, y), b_of(r2xy, z)),
                        module.add(b_of(x, r1yz), b_of(x_r1yz, r2yz)),
                    ),
                };
                if lhs != rhs {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Tables of the extension operator
///   S((a,x), (b,y)) = ((b + u^{m1} phi1(x,y), R1(x,y)),
///                      (a + u^{m2} phi2(x,y), R2(x,y)))
/// on M x X.  Always invertible; satisfies the Yang-Baxter equation exactly
/// when the three extension identities hold, which this constructor does
/// not check.
pub fn extension_operator(
    op: &YBOperator,
    module: &CoefficientModule,
    m1: i64,
    m2: i64,
    phi1: &Cochain,
    phi2: &Cochain,
) -> YBOperator {
    let nx = op.size();
    let nm = module.modulus();
    let total = nm as usize * nx;
    let mut r1 = vec![0; total * total];
    let mut r2 = vec![0; total * total];
    for p in 0..total {
        let (a, x) = pair_decode(nx, p);
        for q in 0..total {
            let (b, y) = pair_decode(nx, q);
            let (r1xy, r2xy) = op.apply(x, y);
            let first = module.add(b, module.act(m1, phi1.get(&[x, y])));
            let second = module.add(a, module.act(m2, phi2.get(&[x, y])));
            r1[p * total + q] = pair_index(nx, first, r1xy);
            r2[p * total + q] = pair_index(nx, second, r2xy);
        }
    }
    YBOperator::new(total, r1, r2).expect("extension tables are invertible")
}

/// Fully validated extension: checks cochain shapes, T-equivariance of both
/// cochains, the Yang-Baxter equation for the extended operator, and wraps
/// the result with its natural twist (a, x) -> (u a, f x).
pub fn build_extension(
    tw: &TwistedYBSet,
    module: &CoefficientModule,
    m1: i64,
    m2: i64,
    phi1: &Cochain,
    phi2: &Cochain,
) -> Result<TwistedYBSet> {
    let nx = tw.size();
    for phi in [phi1, phi2] {
        if phi.degree != 2 {
            return Err(Error::CochainDegree {
                expected: 2,
                got: phi.degree,
            });
        }
        if phi.size != nx {
            return Err(Error::SizeMismatch { a: phi.size, b: nx });
        }
        if let Err(tuple) = crate::cochain::is_equivariant(tw, phi, module) {
            return Err(Error::NotEquivariant { tuple });
        }
    }
    let s = extension_operator(tw.op(), module, m1, m2, phi1, phi2);
    s.verify_ybe()?;
    let nm = module.modulus();
    let total = nm as usize * nx;
    let mut f = vec![0; total];
    for p in 0..total {
        let (a, x) = pair_decode(nx, p);
        f[p] = pair_index(nx, module.act(1, a), tw.twist().apply(x));
    }
    let twist = Perm::new(f).expect("extension twist is a permutation");
    TwistedYBSet::new(s, twist)
}
