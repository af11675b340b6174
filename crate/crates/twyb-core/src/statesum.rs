use crate::cochain::{cocycle_check, Cochain, FaceCtx, TwistParams, Variant};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;
use crate::modular::CoefficientModule;
use crate::yb::TwistedYBSet;

/// One crossing's contribution to a Boltzmann weight:
/// sign * u^{-n * region} * phi_value, in the coefficient module.
pub fn crossing_term(
    module: &CoefficientModule,
    sign: i8,
    n: i64,
    region: i64,
    phi_value: u64,
) -> u64 {
    let scaled = module.mul(module.unit_pow(-(n * region)), phi_value);
    if sign >= 0 {
        scaled
    } else {
        module.neg(scaled)
    }
}

/// Boltzmann weight of one coloring: sum of the crossing terms, with the
/// operator inputs read off the diagram at each crossing.
pub fn coloring_weight(
    diagram: &Diagram,
    module: &CoefficientModule,
    n: i64,
    phi: &Cochain,
    coloring: &[usize],
) -> u64 {
    let mut acc = 0u64;
    for k in 0..diagram.crossing_count() {
        let (x, y) = diagram.weight_inputs(k, coloring);
        let term = crossing_term(
            module,
            diagram.sign(k),
            n,
            diagram.crossing_region(k),
            phi.get(&[x, y]),
        );
        acc = module.add(acc, term);
    }
    acc
}

/// The weighted coloring count: one group-ring term [w] per coloring,
/// where w is the coloring's Boltzmann weight, scaled by size^circles for
/// the crossing-free components.  The cochain must be a degree-2 cocycle
/// of the quotient theory with exponent pair (0, n); anything else is a
/// bug in the caller's data and is rejected up front.
pub fn state_sum(
    diagram: &Diagram,
    tw: &TwistedYBSet,
    module: &CoefficientModule,
    n: i64,
    phi: &Cochain,
    jobs: usize,
) -> Result<GroupRingElement> {
    if phi.degree != 2 {
        return Err(Error::CochainDegree {
            expected: 2,
            got: phi.degree,
        });
    }
    let ctx = FaceCtx::new(tw, TwistParams::scalar(0, 0, n, Variant::Tbq))?;
    cocycle_check(&ctx, phi, module)?;
    let colorings = diagram.colorings(tw.op(), jobs)?;
    let mut out = GroupRingElement::zero(module.modulus());
    for coloring in &colorings {
        out.add_term(coloring_weight(diagram, module, n, phi, coloring), 1);
    }
    let mult = (tw.size() as i64)
        .checked_pow(diagram.circles() as u32)
        .ok_or(Error::Overflow {
            context: "free-circle multiplicity",
        })?;
    out.scale(mult);
    Ok(out)
}

/// The state sum reduced modulo the twist period: well defined only when
/// u^(n*p) = 1 for p the order of the twist, in which case the value is
/// meaningful up to the [m] -> [u m] shift and we return the orbit
/// representative.
pub fn state_sum_up_to_twist(
    diagram: &Diagram,
    tw: &TwistedYBSet,
    module: &CoefficientModule,
    n: i64,
    phi: &Cochain,
    jobs: usize,
) -> Result<GroupRingElement> {
    let p = tw.twist_order() as i64;
    if module.unit_pow(n * p) != 1 {
        return Err(Error::BadWeightMap {
            reason: format!(
                "u^(n*p) must equal 1 to reduce by the twist period (u = {}, n = {}, p = {})",
                module.unit(),
                n,
                p
            ),
        });
    }
    Ok(state_sum(diagram, tw, module, n, phi, jobs)?.normalize_up_to_t(module))
}

/// One crossing record of a colored surface diagram: the three operator
/// inputs, the crossing sign, and the region number of its source octant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleRecord {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub sign: i8,
    pub region: i64,
}

/// All triple points of one coloring of a surface diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringTriples {
    pub id: String,
    pub triples: Vec<TripleRecord>,
}

/// Weight of one surface coloring: sum of sign * u^{-n * region} *
/// theta(x, y, z) over its triple points.
pub fn surface_weight(
    module: &CoefficientModule,
    n: i64,
    theta: &Cochain,
    triples: &[TripleRecord],
) -> u64 {
    let mut acc = 0u64;
    for t in triples {
        let term = crossing_term(module, t.sign, n, t.region, theta.get(&[t.x, t.y, t.z]));
        acc = module.add(acc, term);
    }
    acc
}

/// The surface analogue of the state sum: one term [w] per supplied
/// coloring.  Requires a degree-3 cocycle with exponent pair (0, n).
pub fn surface_state_sum(
    tw: &TwistedYBSet,
    module: &CoefficientModule,
    n: i64,
    theta: &Cochain,
    groups: &[ColoringTriples],
) -> Result<GroupRingElement> {
    if theta.degree != 3 {
        return Err(Error::CochainDegree {
            expected: 3,
            got: theta.degree,
        });
    }
    let ctx = FaceCtx::new(tw, TwistParams::scalar(0, 0, n, Variant::Tbq))?;
    cocycle_check(&ctx, theta, module)?;
    let size = tw.size();
    for g in groups {
        for (i, t) in g.triples.iter().enumerate() {
            for v in [t.x, t.y, t.z] {
                if v >= size {
                    return Err(Error::EntryRange {
                        index: i,
                        value: v,
                        size,
                    });
                }
            }
        }
    }
    let mut out = GroupRingElement::zero(module.modulus());
    for g in groups {
        out.add_term(surface_weight(module, n, theta, &g.triples), 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{cocycle_space, evaluate_delta, tuple_count, DEFAULT_SIZE_GUARD};
    use crate::diagram::PdInput;
    use crate::perm::Perm;
    use crate::yb::{cyclic_operator, dihedral_operator, from_quandle};
    use rand::{Rng, SeedableRng};

    fn trefoil() -> Diagram {
        Diagram::build(&PdInput::knot(vec![
            [1, 4, 2, 5],
            [3, 6, 4, 1],
            [5, 2, 6, 3],
        ]))
        .unwrap()
    }

    fn figure_eight() -> Diagram {
        Diagram::build(&PdInput::knot(vec![
            [4, 2, 5, 1],
            [8, 6, 1, 5],
            [6, 3, 7, 4],
            [2, 7, 3, 8],
        ]))
        .unwrap()
    }

    #[test]
    fn crossing_term_frozen_values() {
        // region 1, u = 2 in Z/5, n = 1, phi value 1: the positive crossing
        // contributes u^{-1} = 3, the negative one -u^{-1} = 2
        let m = CoefficientModule::new(5, 2).unwrap();
        assert_eq!(crossing_term(&m, 1, 1, 1, 1), 3);
        assert_eq!(crossing_term(&m, -1, 1, 1, 1), 2);
    }

    #[test]
    fn zero_cocycle_counts_colorings() {
        let tw = TwistedYBSet::untwisted(dihedral_operator(3));
        let m = CoefficientModule::new(3, 1).unwrap();
        let phi = Cochain::zero(3, 2);
        let inv = state_sum(&trefoil(), &tw, &m, 0, &phi, 1).unwrap();
        assert_eq!(inv.coeff(0), 9);
        assert_eq!(inv.total(), 9);
        // two free circles multiply the count by 3^2
        let mut input = PdInput::knot(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]);
        input.circles = 2;
        let d = Diagram::build(&input).unwrap();
        let inv = state_sum(&d, &tw, &m, 0, &phi, 1).unwrap();
        assert_eq!(inv.coeff(0), 81);
    }

    #[test]
    fn coboundaries_wash_out() {
        // weights built from a coboundary telescope to zero along each
        // strand, so the invariant collapses to the coloring count
        let tw = TwistedYBSet::untwisted(dihedral_operator(3));
        let m = CoefficientModule::new(3, 1).unwrap();
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 0, Variant::Tbq)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let mut eta = Cochain::zero(3, 1);
            for r in 0..tuple_count(3, 1) {
                eta.values[r] = rng.gen_range(0..3);
            }
            let phi = evaluate_delta(&ctx, &eta, &m);
            let inv = state_sum(&trefoil(), &tw, &m, 0, &phi, 1).unwrap();
            assert_eq!(inv.coeff(0), 9, "eta = {:?}", eta.values);
            let inv = state_sum(&figure_eight(), &tw, &m, 0, &phi, 1).unwrap();
            assert_eq!(inv.coeff(0), 3, "eta = {:?}", eta.values);
        }
    }

    #[test]
    fn trefoil_sees_a_nontrivial_class() {
        // the four-element Alexander quandle over the field of four
        // elements (x * y = Tx + (T+1)y with 0, 1, T, T+1 encoded as
        // 0..4) carries a mod-2 class that separates the trefoil from
        // the unknot; the classical invariant value is 4 + 12 [1]
        let star = vec![0, 3, 1, 2, 2, 1, 3, 0, 3, 0, 2, 1, 1, 2, 0, 3];
        let tw = TwistedYBSet::untwisted(from_quandle(4, &star).unwrap());
        let m = CoefficientModule::new(2, 1).unwrap();
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 0, Variant::Tbq)).unwrap();
        let space = cocycle_space(&ctx, 2, &m, false, DEFAULT_SIZE_GUARD).unwrap();
        let d = trefoil();
        let mut nontrivial = 0;
        for phi in &space.basis {
            let inv = state_sum(&d, &tw, &m, 0, phi, 1).unwrap();
            assert_eq!(inv.total(), 16);
            if inv.coeff(0) != 16 {
                nontrivial += 1;
                // the four constant colorings always weigh zero
                assert_eq!(inv.coeff(0), 4);
                assert_eq!(inv.coeff(1), 12);
            }
        }
        assert!(nontrivial > 0);

        // negative control: every dihedral-3 2-cocycle mod 3 is a
        // coboundary, so both knots land on coloring counts times [0]
        let tw = TwistedYBSet::untwisted(dihedral_operator(3));
        let m = CoefficientModule::new(3, 1).unwrap();
        let ctx = FaceCtx::new(&tw, TwistParams::scalar(0, 0, 0, Variant::Tbq)).unwrap();
        let space = cocycle_space(&ctx, 2, &m, false, DEFAULT_SIZE_GUARD).unwrap();
        for phi in &space.basis {
            let inv = state_sum(&trefoil(), &tw, &m, 0, phi, 1).unwrap();
            assert_eq!(inv.coeff(0), 9);
            assert_eq!(inv.total(), 9);
            let inv = state_sum(&figure_eight(), &tw, &m, 0, phi, 1).unwrap();
            assert_eq!(inv.coeff(0), 3);
            assert_eq!(inv.total(), 3);
        }
    }

    #[test]
    fn invalid_weight_data_is_rejected() {
        let tw = TwistedYBSet::untwisted(dihedral_operator(3));
        let m = CoefficientModule::new(3, 1).unwrap();
        // wrong degree
        let phi = Cochain::zero(3, 1);
        assert!(matches!(
            state_sum(&trefoil(), &tw, &m, 0, &phi, 1),
            Err(Error::CochainDegree {
                expected: 2,
                got: 1
            })
        ));
        // constant 1 is supported on degenerate pairs
        let mut phi = Cochain::zero(3, 2);
        for v in phi.values.iter_mut() {
            *v = 1;
        }
        assert!(matches!(
            state_sum(&trefoil(), &tw, &m, 0, &phi, 1),
            Err(Error::DegenerateSupport { .. })
        ));
    }

    #[test]
    fn twist_period_gate() {
        let op = cyclic_operator(3);
        let shift = Perm::new(vec![1, 2, 0]).unwrap();
        let tw = TwistedYBSet::new(op, shift).unwrap();
        assert_eq!(tw.twist_order(), 3);
        let phi = Cochain::zero(3, 2);
        // u = 2 has order 4 mod 5, so u^(1*3) != 1
        let m5 = CoefficientModule::new(5, 2).unwrap();
        assert!(matches!(
            state_sum_up_to_twist(&trefoil(), &tw, &m5, 1, &phi, 1),
            Err(Error::BadWeightMap { .. })
        ));
        // u = 2 has order 3 mod 7, so the reduction is defined
        let m7 = CoefficientModule::new(7, 2).unwrap();
        let inv = state_sum_up_to_twist(&trefoil(), &tw, &m7, 1, &phi, 1).unwrap();
        assert_eq!(inv.coeff(0), 3);
        assert_eq!(inv.total(), 3);
    }

    #[test]
    fn surface_weight_frozen_value() {
        // one positive triple point in region 2 with theta value 1, u = 2
        // in Z/5, n = 1: the weight is u^{-2} = 4
        let m = CoefficientModule::new(5, 2).unwrap();
        let mut theta = Cochain::zero(2, 3);
        theta.set(&[0, 1, 0], 1);
        let rec = TripleRecord {
            x: 0,
            y: 1,
            z: 0,
            sign: 1,
            region: 2,
        };
        assert_eq!(surface_weight(&m, 1, &theta, &[rec]), 4);
    }

    #[test]
    fn surface_state_sum_with_zero_cocycle() {
        let tw = TwistedYBSet::untwisted(dihedral_operator(3));
        let m = CoefficientModule::new(3, 1).unwrap();
        let theta = Cochain::zero(3, 3);
        let groups = vec![
            ColoringTriples {
                id: "c0".into(),
                triples: vec![TripleRecord {
                    x: 0,
                    y: 1,
                    z: 2,
                    sign: 1,
                    region: 0,
                }],
            },
            ColoringTriples {
                id: "c1".into(),
                triples: Vec::new(),
            },
        ];
        let inv = surface_state_sum(&tw, &m, 0, &theta, &groups).unwrap();
        assert_eq!(inv.coeff(0), 2);
        // out-of-range color
        let bad = vec![ColoringTriples {
            id: "c2".into(),
            triples: vec![TripleRecord {
                x: 5,
                y: 0,
                z: 0,
                sign: 1,
                region: 0,
            }],
        }];
        assert!(matches!(
            surface_state_sum(&tw, &m, 0, &theta, &bad),
            Err(Error::EntryRange { value: 5, .. })
        ));
        // degree gate
        let theta2 = Cochain::zero(3, 2);
        assert!(matches!(
            surface_state_sum(&tw, &m, 0, &theta2, &[]),
            Err(Error::CochainDegree {
                expected: 3,
                got: 2
            })
        ));
    }
}
