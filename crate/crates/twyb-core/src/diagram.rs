use crate::error::{Error, Result};
use crate::yb::{StructureClass, YBOperator};

/// Which side of a semiarc a directive points at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Raw diagram data before orientation and face analysis.
///
/// Each crossing is [a, b, c, d]: the four semiarc labels counterclockwise
/// around the crossing starting at the incoming under-strand, so `c` is the
/// outgoing under-strand and `b`, `d` are the two over-strand ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdInput {
    pub crossings: Vec<[usize; 4]>,
    /// Reflect the diagram: [a,b,c,d] -> [a,d,c,b], outer side flipped.
    pub mirror: bool,
    /// Number regions with the normal pointing right of each strand
    /// instead of left.
    pub normal_right: bool,
    /// Extra crossing-free circles, each contributing a free color.
    pub circles: usize,
    /// Which region is the outer one: a side of a semiarc.  Defaults to
    /// the left of semiarc 1.
    pub outer: Option<(usize, Side)>,
}

impl PdInput {
    pub fn knot(crossings: Vec<[usize; 4]>) -> Self {
        PdInput {
            crossings,
            mirror: false,
            normal_right: false,
            circles: 0,
            outer: None,
        }
    }
}

#[derive(Debug, Clone)]
struct Crossing {
    ends: [usize; 4],
    /// 1 or 3: the slot where the over-strand enters.
    over_in: usize,
}

impl Crossing {
    fn sign(&self) -> i8 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }
}

/// A fully analyzed oriented knot or link diagram in the plane: orientation
/// roles resolved, faces traced, regions numbered by the Alexander rule
/// with the outer region at zero.
#[derive(Debug, Clone)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    n_semiarcs: usize,
    /// head_occ[s-1] = (crossing, slot) where semiarc s flows in.
    head_occ: Vec<(usize, usize)>,
    succ: Vec<usize>,
    components: Vec<Vec<usize>>,
    /// face_of[dart] with dart = 2*(s-1) + (0 forward | 1 backward).
    face_of: Vec<usize>,
    n_faces: usize,
    outer_face: usize,
    region_value: Vec<i64>,
    source_face: Vec<usize>,
    circles: usize,
}

fn dart_forward(s: usize) -> usize {
    2 * (s - 1)
}

fn dart_backward(s: usize) -> usize {
    2 * (s - 1) + 1
}

impl Diagram {
    pub fn build(input: &PdInput) -> Result<Diagram> {
        let n = input.crossings.len();
        if n == 0 {
            return Ok(Diagram {
                crossings: Vec::new(),
                n_semiarcs: 0,
                head_occ: Vec::new(),
                succ: Vec::new(),
                components: Vec::new(),
                face_of: Vec::new(),
                n_faces: 0,
                outer_face: 0,
                region_value: Vec::new(),
                source_face: Vec::new(),
                circles: input.circles,
            });
        }
        let mut ends: Vec<[usize; 4]> = input.crossings.clone();
        let mut outer = input.outer.unwrap_or((1, Side::Left));
        if input.mirror {
            for e in ends.iter_mut() {
                e.swap(1, 3);
            }
            outer.1 = match outer.1 {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
        }

        let n_semiarcs = 2 * n;
        let mut counts = vec![0usize; n_semiarcs + 1];
        for e in &ends {
            for &s in e {
                if s < 1 || s > n_semiarcs {
                    return Err(Error::SemiarcCount {
                        semiarc: s,
                        count: 0,
                    });
                }
                counts[s] += 1;
            }
        }
        for s in 1..=n_semiarcs {
            if counts[s] != 2 {
                return Err(Error::SemiarcCount {
                    semiarc: s,
                    count: counts[s],
                });
            }
        }
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_semiarcs + 1];
        for (k, e) in ends.iter().enumerate() {
            for (slot, &s) in e.iter().enumerate() {
                occ[s].push((k, slot));
            }
        }

        // orientation roles: role[k][slot] = Some(true) if the strand flows
        // into the crossing there.  Under slots are fixed; over slots are
        // propagated, with a label-order heuristic for anything the
        // constraints leave free (over-only components).
        let mut role: Vec<[Option<bool>; 4]> = vec![[None; 4]; n];
        for k in 0..n {
            role[k][0] = Some(true);
            role[k][2] = Some(false);
        }
        let propagate = |role: &mut Vec<[Option<bool>; 4]>| -> Result<bool> {
            let mut changed = false;
            loop {
                let mut step = false;
                for s in 1..=n_semiarcs {
                    let [(k1, s1), (k2, s2)] = [occ[s][0], occ[s][1]];
                    match (role[k1][s1], role[k2][s2]) {
                        (Some(a), Some(b)) if a == b => {
                            return Err(Error::OrientationConflict { semiarc: s })
                        }
                        (Some(a), None) => {
                            role[k2][s2] = Some(!a);
                            step = true;
                        }
                        (None, Some(b)) => {
                            role[k1][s1] = Some(!b);
                            step = true;
                        }
                        _ => {}
                    }
                }
                for k in 0..n {
                    match (role[k][1], role[k][3]) {
                        (Some(a), Some(b)) if a == b => {
                            return Err(Error::OrientationConflict {
                                semiarc: ends[k][1],
                            })
                        }
                        (Some(a), None) => {
                            role[k][3] = Some(!a);
                            step = true;
                        }
                        (None, Some(b)) => {
                            role[k][1] = Some(!b);
                            step = true;
                        }
                        _ => {}
                    }
                }
                if !step {
                    break;
                }
                changed = true;
            }
            Ok(changed)
        };
        propagate(&mut role)?;
        loop {
            let Some(k) = (0..n).find(|&k| role[k][1].is_none()) else {
                break;
            };
            // label-order heuristic for components with no under-crossings:
            // consecutive labels flow forward, otherwise the larger label is
            // the wrapping end of its component and flows in
            let (b, d) = (ends[k][1], ends[k][3]);
            let next = |x: usize| x % n_semiarcs + 1;
            let over_in_slot = if next(b) == d {
                1
            } else if next(d) == b {
                3
            } else if b > d {
                1
            } else {
                3
            };
            role[k][over_in_slot] = Some(true);
            role[k][(over_in_slot + 2) % 4] = Some(false);
            propagate(&mut role)?;
        }

        let crossings: Vec<Crossing> = (0..n)
            .map(|k| Crossing {
                ends: ends[k],
                over_in: if role[k][1] == Some(true) { 1 } else { 3 },
            })
            .collect();

        // every semiarc must now have one inflow and one outflow occurrence
        let mut head_occ = vec![(usize::MAX, 0); n_semiarcs];
        let mut tail_occ = vec![(usize::MAX, 0); n_semiarcs];
        for s in 1..=n_semiarcs {
            let mut heads = 0;
            for &(k, slot) in &occ[s] {
                if role[k][slot] == Some(true) {
                    head_occ[s - 1] = (k, slot);
                    heads += 1;
                } else {
                    tail_occ[s - 1] = (k, slot);
                }
            }
            if heads != 1 {
                return Err(Error::OrientationConflict { semiarc: s });
            }
        }

        // strand successor: leave through the paired outgoing slot
        let mut succ = vec![0usize; n_semiarcs];
        for s in 1..=n_semiarcs {
            let (k, slot) = head_occ[s - 1];
            succ[s - 1] = match slot {
                0 => crossings[k].ends[2],
                1 => crossings[k].ends[3],
                3 => crossings[k].ends[1],
                _ => unreachable!("slot 2 is never an inflow"),
            };
        }
        let mut components = Vec::new();
        let mut seen = vec![false; n_semiarcs];
        for start in 1..=n_semiarcs {
            if seen[start - 1] {
                continue;
            }
            let mut comp = Vec::new();
            let mut s = start;
            while !seen[s - 1] {
                seen[s - 1] = true;
                comp.push(s);
                s = succ[s - 1];
            }
            components.push(comp);
        }

        // face tracing in the rotation system: a dart entering a crossing
        // at slot sigma continues along the dart leaving at the clockwise
        // next slot, which keeps the traced face on the left
        let entered = |dart: usize| -> (usize, usize) {
            let s = dart / 2 + 1;
            if dart % 2 == 0 {
                head_occ[s - 1]
            } else {
                tail_occ[s - 1]
            }
        };
        let face_next = |dart: usize| -> usize {
            let (k, sigma) = entered(dart);
            let slot = (sigma + 3) % 4;
            let s2 = crossings[k].ends[slot];
            if tail_occ[s2 - 1] == (k, slot) {
                dart_forward(s2)
            } else {
                dart_backward(s2)
            }
        };
        let mut face_of = vec![usize::MAX; 2 * n_semiarcs];
        let mut n_faces = 0;
        for d0 in 0..2 * n_semiarcs {
            if face_of[d0] != usize::MAX {
                continue;
            }
            let mut d = d0;
            loop {
                face_of[d] = n_faces;
                d = face_next(d);
                if d == d0 {
                    break;
                }
            }
            n_faces += 1;
        }
        let expected = n + 2;
        if n_faces != expected {
            return Err(Error::NonPlanar {
                crossings: n,
                faces: n_faces,
                expected,
            });
        }

        let (outer_semiarc, outer_side) = outer;
        if outer_semiarc < 1 || outer_semiarc > n_semiarcs {
            return Err(Error::BadOuterDirective {
                semiarc: outer_semiarc,
            });
        }
        let outer_face = match outer_side {
            Side::Left => face_of[dart_forward(outer_semiarc)],
            Side::Right => face_of[dart_backward(outer_semiarc)],
        };

        // Alexander numbering: walking along a strand, the region on the
        // normal side is one higher than the region on the other side
        let delta: i64 = if input.normal_right { -1 } else { 1 };
        let mut region_value = vec![i64::MAX; n_faces];
        region_value[outer_face] = 0;
        let mut queue = std::collections::VecDeque::from([outer_face]);
        let mut adj: Vec<Vec<(usize, i64, usize)>> = vec![Vec::new(); n_faces];
        for s in 1..=n_semiarcs {
            let lf = face_of[dart_forward(s)];
            let rf = face_of[dart_backward(s)];
            // value(left) - value(right) = delta
            adj[rf].push((lf, delta, s));
            adj[lf].push((rf, -delta, s));
        }
        while let Some(f) = queue.pop_front() {
            let base = region_value[f];
            for &(g, d, s) in &adj[f] {
                if region_value[g] == i64::MAX {
                    region_value[g] = base + d;
                    queue.push_back(g);
                } else if region_value[g] != base + d {
                    return Err(Error::NumberingInconsistent { semiarc: s });
                }
            }
        }
        debug_assert!(region_value.iter().all(|&v| v != i64::MAX));

        // the region each crossing contributes from: the quadrant behind
        // both outgoing normals, which depends on the sign and the normal
        // convention
        let dart_into = |k: usize, slot: usize| -> usize {
            let s = crossings[k].ends[slot];
            if head_occ[s - 1] == (k, slot) {
                dart_forward(s)
            } else {
                dart_backward(s)
            }
        };
        let quadrant_face =
            |k: usize, slot: usize| -> usize { face_of[dart_into(k, (slot + 1) % 4)] };
        let mut source_face = vec![0usize; n];
        for k in 0..n {
            let slot = match (crossings[k].sign(), input.normal_right) {
                (1, false) => 0,
                (-1, false) => 1,
                (1, true) => 2,
                (-1, true) => 3,
                _ => unreachable!(),
            };
            source_face[k] = quadrant_face(k, slot);
        }

        Ok(Diagram {
            crossings,
            n_semiarcs,
            head_occ,
            succ,
            components,
            face_of,
            n_faces,
            outer_face,
            region_value,
            source_face,
            circles: input.circles,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn semiarc_count(&self) -> usize {
        self.n_semiarcs
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn ends(&self, k: usize) -> [usize; 4] {
        self.crossings[k].ends
    }

    pub fn sign(&self, k: usize) -> i8 {
        self.crossings[k].sign()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign() as i64).sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn successor(&self, s: usize) -> usize {
        self.succ[s - 1]
    }

    pub fn face_count(&self) -> usize {
        self.n_faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn region_values(&self) -> &[i64] {
        &self.region_value
    }

    pub fn left_region(&self, s: usize) -> i64 {
        self.region_value[self.face_of[dart_forward(s)]]
    }

    pub fn right_region(&self, s: usize) -> i64 {
        self.region_value[self.face_of[dart_backward(s)]]
    }

    /// Region number of the source quadrant of crossing k.
    pub fn crossing_region(&self, k: usize) -> i64 {
        self.region_value[self.source_face[k]]
    }

    /// The four quadrant region numbers around crossing k, starting with
    /// the quadrant between slots 0 and 1, counterclockwise.
    pub fn quadrant_values(&self, k: usize) -> [i64; 4] {
        let dart_into = |slot: usize| -> usize {
            let s = self.crossings[k].ends[slot];
            if self.head_occ[s - 1] == (k, slot) {
                dart_forward(s)
            } else {
                dart_backward(s)
            }
        };
        let q = |slot: usize| self.region_value[self.face_of[dart_into((slot + 1) % 4)]];
        [q(0), q(1), q(2), q(3)]
    }

    /// The operator input pair for crossing k under a coloring: the colors
    /// on the two incoming R-arguments.
    pub fn weight_inputs(&self, k: usize, coloring: &[usize]) -> (usize, usize) {
        let e = self.crossings[k].ends;
        if self.crossings[k].sign() == 1 {
            (coloring[e[0] - 1], coloring[e[3] - 1])
        } else {
            (coloring[e[2] - 1], coloring[e[3] - 1])
        }
    }

    /// All colorings of the semiarcs by the given solution, in
    /// lexicographic order.  At a positive crossing [a,b,c,d] the rule is
    /// (color b, color c) = R(color a, color d); at a negative crossing
    /// (color b, color a) = R(color c, color d).
    pub fn colorings(&self, op: &YBOperator, jobs: usize) -> Result<Vec<Vec<usize>>> {
        let class = op.classify()?;
        if class != StructureClass::Biquandle {
            return Err(Error::RequiresBiquandle {
                found: match class {
                    StructureClass::YangBaxterSet => "yang-baxter set",
                    StructureClass::Birack => "birack",
                    StructureClass::Biquandle => unreachable!(),
                },
            });
        }
        if self.n_semiarcs == 0 {
            return Ok(vec![Vec::new()]);
        }
        let state = vec![None; self.n_semiarcs];
        if jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool construction");
            let size = op.size();
            let results: Vec<Vec<Vec<usize>>> = pool.install(|| {
                use rayon::prelude::*;
                (0..size)
                    .into_par_iter()
                    .map(|first| {
                        let mut local = state.clone();
                        let mut out = Vec::new();
                        local[0] = Some(first);
                        if self.propagate(op, &mut local) {
                            self.search(op, local, &mut out);
                        }
                        out
                    })
                    .collect()
            });
            Ok(results.into_iter().flatten().collect())
        } else {
            let mut out = Vec::new();
            self.search(op, state, &mut out);
            Ok(out)
        }
    }

    fn search(&self, op: &YBOperator, state: Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(idx) = state.iter().position(|c| c.is_none()) else {
            out.push(state.into_iter().map(|c| c.unwrap()).collect());
            return;
        };
        for v in 0..op.size() {
            let mut next = state.clone();
            next[idx] = Some(v);
            if self.propagate(op, &mut next) {
                self.search(op, next, out);
            }
        }
    }

    /// Close the coloring constraints; false on conflict.
    fn propagate(&self, op: &YBOperator, state: &mut [Option<usize>]) -> bool {
        let set = |state: &mut [Option<usize>], s: usize, v: usize| -> Option<bool> {
            match state[s - 1] {
                None => {
                    state[s - 1] = Some(v);
                    Some(true)
                }
                Some(old) => {
                    if old == v {
                        Some(false)
                    } else {
                        None
                    }
                }
            }
        };
        loop {
            let mut changed = false;
            for c in &self.crossings {
                let [a, b, cc, d] = c.ends;
                let (in1, in2, out1, out2) = if c.sign() == 1 {
                    (a, d, b, cc)
                } else {
                    (cc, d, b, a)
                };
                if let (Some(x), Some(y)) = (state[in1 - 1], state[in2 - 1]) {
                    let (r1, r2) = op.apply(x, y);
                    match (set(state, out1, r1), set(state, out2, r2)) {
                        (Some(c1), Some(c2)) => changed |= c1 | c2,
                        _ => return false,
                    }
                } else if let (Some(x), Some(y)) = (state[out1 - 1], state[out2 - 1]) {
                    let (r1, r2) = op.apply_inv(x, y);
                    match (set(state, in1, r1), set(state, in2, r2)) {
                        (Some(c1), Some(c2)) => changed |= c1 | c2,
                        _ => return false,
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yb::{cyclic_operator, dihedral_operator};

    /// The standard all-negative trefoil diagram used throughout.
    pub fn trefoil() -> PdInput {
        PdInput::knot(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    }

    #[test]
    fn trefoil_orientation_and_signs() {
        let d = Diagram::build(&trefoil()).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.semiarc_count(), 6);
        for k in 0..3 {
            assert_eq!(d.sign(k), -1, "crossing {k}");
        }
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.components().len(), 1);
        // successor chain visits every semiarc once
        let mut s = 1;
        let mut visited = vec![1];
        for _ in 0..5 {
            s = d.successor(s);
            visited.push(s);
        }
        visited.sort_unstable();
        assert_eq!(visited, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn trefoil_regions_frozen() {
        // hand-traced: outer region (left of semiarcs 1, 3, 5) is 0, the
        // three two-sided regions are -1, the region right of 2, 4, 6 is
        // -2, and every crossing contributes from the -2 region
        let d = Diagram::build(&trefoil()).unwrap();
        assert_eq!(d.face_count(), 5);
        let mut values = d.region_values().to_vec();
        values.sort_unstable();
        assert_eq!(values, vec![-2, -1, -1, -1, 0]);
        for s in [1, 3, 5] {
            assert_eq!(d.left_region(s), 0, "semiarc {s}");
        }
        for s in [2, 4, 6] {
            assert_eq!(d.right_region(s), -2, "semiarc {s}");
        }
        for k in 0..3 {
            assert_eq!(d.crossing_region(k), -2, "crossing {k}");
        }
    }

    #[test]
    fn quadrants_step_by_one() {
        // around any crossing the four quadrants read k, k+1, k+1, k+2
        for input in [
            trefoil(),
            PdInput::knot(vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]),
        ] {
            let d = Diagram::build(&input).unwrap();
            for k in 0..d.crossing_count() {
                let mut q = d.quadrant_values(k).to_vec();
                q.sort_unstable();
                let base = q[0];
                assert_eq!(q, vec![base, base + 1, base + 1, base + 2], "crossing {k}");
            }
        }
    }

    #[test]
    fn kink_orientation_needs_propagation() {
        // a single kink: the over slots are forced by the under roles, not
        // by the label heuristic
        let d = Diagram::build(&PdInput::knot(vec![[1, 2, 2, 1]])).unwrap();
        assert_eq!(d.sign(0), -1);
        assert_eq!(d.crossing_region(0), -2);
        // and the positive kink partner
        let d = Diagram::build(&PdInput::knot(vec![[1, 1, 2, 2]])).unwrap();
        assert_eq!(d.sign(0), 1);
        assert_eq!(d.crossing_region(0), -1);
    }

    #[test]
    fn figure_eight_signs() {
        let d = Diagram::build(&PdInput::knot(vec![
            [4, 2, 5, 1],
            [8, 6, 1, 5],
            [6, 3, 7, 4],
            [2, 7, 3, 8],
        ]))
        .unwrap();
        let signs: Vec<i8> = (0..4).map(|k| d.sign(k)).collect();
        assert_eq!(signs.iter().filter(|&&s| s == 1).count(), 2);
        assert_eq!(signs.iter().filter(|&&s| s == -1).count(), 2);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.face_count(), 6);
    }

    #[test]
    fn mirror_negates_the_region_map() {
        let base = Diagram::build(&trefoil()).unwrap();
        let mut mirrored_input = trefoil();
        mirrored_input.mirror = true;
        let mirrored = Diagram::build(&mirrored_input).unwrap();
        for s in 1..=6 {
            assert_eq!(
                mirrored.left_region(s),
                -base.right_region(s),
                "semiarc {s}"
            );
            assert_eq!(
                mirrored.right_region(s),
                -base.left_region(s),
                "semiarc {s}"
            );
        }
        // signs flip too
        for k in 0..3 {
            assert_eq!(mirrored.sign(k), -base.sign(k));
        }
    }

    #[test]
    fn bad_inputs_are_rejected() {
        // a label appearing four times
        assert!(matches!(
            Diagram::build(&PdInput::knot(vec![[1, 1, 1, 1]])),
            Err(Error::SemiarcCount { semiarc: 1, .. })
        ));
        // out-of-range label
        assert!(matches!(
            Diagram::build(&PdInput::knot(vec![[1, 2, 2, 9]])),
            Err(Error::SemiarcCount { semiarc: 9, .. })
        ));
        // bad outer directive
        let mut input = trefoil();
        input.outer = Some((11, Side::Left));
        assert!(matches!(
            Diagram::build(&input),
            Err(Error::BadOuterDirective { semiarc: 11 })
        ));
    }

    #[test]
    fn trefoil_coloring_count() {
        let d = Diagram::build(&trefoil()).unwrap();
        let dihedral = dihedral_operator(3);
        let cols = d.colorings(&dihedral, 1).unwrap();
        assert_eq!(cols.len(), 9);
        // sorted lexicographically and all distinct
        for w in cols.windows(2) {
            assert!(w[0] < w[1]);
        }
        // every coloring satisfies the crossing rule
        for c in &cols {
            for k in 0..3 {
                let [a, b, cc, dd] = d.ends(k);
                let (x, y) = (c[cc - 1], c[dd - 1]);
                assert_eq!(dihedral.apply(x, y), (c[b - 1], c[a - 1]));
            }
        }
        // dihedral Z/5 sees only the trivial colorings
        assert_eq!(d.colorings(&dihedral_operator(5), 1).unwrap().len(), 5);
    }

    #[test]
    fn figure_eight_coloring_counts() {
        let d = Diagram::build(&PdInput::knot(vec![
            [4, 2, 5, 1],
            [8, 6, 1, 5],
            [6, 3, 7, 4],
            [2, 7, 3, 8],
        ]))
        .unwrap();
        assert_eq!(d.colorings(&dihedral_operator(3), 1).unwrap().len(), 3);
        assert_eq!(d.colorings(&dihedral_operator(5), 1).unwrap().len(), 25);
    }

    #[test]
    fn parallel_enumeration_matches_sequential() {
        let d = Diagram::build(&trefoil()).unwrap();
        let op = dihedral_operator(3);
        let seq = d.colorings(&op, 1).unwrap();
        let par = d.colorings(&op, 3).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn colorings_require_a_biquandle() {
        let d = Diagram::build(&trefoil()).unwrap();
        assert!(matches!(
            d.colorings(&crate::yb::birack_not_biquandle_z2(), 1),
            Err(Error::RequiresBiquandle { found: "birack" })
        ));
    }

    #[test]
    fn circles_only_diagram() {
        let input = PdInput {
            crossings: Vec::new(),
            mirror: false,
            normal_right: false,
            circles: 2,
            outer: None,
        };
        let d = Diagram::build(&input).unwrap();
        assert_eq!(d.circles(), 2);
        assert_eq!(
            d.colorings(&cyclic_operator(3), 1).unwrap(),
            vec![Vec::new()]
        );
    }

    #[test]
    fn normal_right_flips_the_numbering() {
        let left = Diagram::build(&trefoil()).unwrap();
        let mut input = trefoil();
        input.normal_right = true;
        let right = Diagram::build(&input).unwrap();
        let mut lv = left.region_values().to_vec();
        let mut rv = right.region_values().to_vec();
        lv.sort_unstable();
        rv.sort_unstable();
        let negated: Vec<i64> = lv.iter().rev().map(|&v| -v).collect();
        assert_eq!(rv, negated);
    }
}
