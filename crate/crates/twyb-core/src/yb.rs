use crate::error::{Error, Result};
use crate::perm::Perm;

/// An invertible map R(x,y) = (R1(x,y), R2(x,y)) on X x X, stored as two
/// flat tables indexed by x * size + y.  Inverse tables are built eagerly so
/// construction fails fast on non-invertible input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YBOperator {
    size: usize,
    r1: Vec<usize>,
    r2: Vec<usize>,
    rb1: Vec<usize>,
    rb2: Vec<usize>,
}

/// Where a solution sits in the birack hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClass {
    YangBaxterSet,
    Birack,
    Biquandle,
}

impl std::fmt::Display for StructureClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StructureClass::YangBaxterSet => "yang-baxter set",
            StructureClass::Birack => "birack",
            StructureClass::Biquandle => "biquandle",
        };
        f.write_str(s)
    }
}

impl YBOperator {
    pub fn new(size: usize, r1: Vec<usize>, r2: Vec<usize>) -> Result<Self> {
        let expected = size * size;
        for table in [&r1, &r2] {
            if table.len() != expected {
                return Err(Error::TableShape {
                    expected,
                    got: table.len(),
                });
            }
        }
        for (index, &value) in r1.iter().chain(r2.iter()).enumerate() {
            if value >= size {
                return Err(Error::EntryRange {
                    index: index % expected,
                    value,
                    size,
                });
            }
        }
        let mut rb1 = vec![usize::MAX; expected];
        let mut rb2 = vec![usize::MAX; expected];
        let mut source: Vec<Option<(usize, usize)>> = vec![None; expected];
        for x in 0..size {
            for y in 0..size {
                let image = r1[x * size + y] * size + r2[x * size + y];
                if let Some((x1, y1)) = source[image] {
                    return Err(Error::NotInvertible {
                        x1,
                        y1,
                        x2: x,
                        y2: y,
                    });
                }
                source[image] = Some((x, y));
                rb1[image] = x;
                rb2[image] = y;
            }
        }
        Ok(YBOperator {
            size,
            r1,
            r2,
            rb1,
            rb2,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn r1(&self, x: usize, y: usize) -> usize {
        self.r1[x * self.size + y]
    }

    pub fn r2(&self, x: usize, y: usize) -> usize {
        self.r2[x * self.size + y]
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.r1(x, y), self.r2(x, y))
    }

    /// Components of the inverse map.
    pub fn rb1(&self, x: usize, y: usize) -> usize {
        self.rb1[x * self.size + y]
    }

    pub fn rb2(&self, x: usize, y: usize) -> usize {
        self.rb2[x * self.size + y]
    }

    pub fn apply_inv(&self, x: usize, y: usize) -> (usize, usize) {
        (self.rb1(x, y), self.rb2(x, y))
    }

    /// Checks (R x id)(id x R)(R x id) = (id x R)(R x id)(id x R) on every
    /// triple, returning the first failing triple as a witness.
    pub fn verify_ybe(&self) -> Result<()> {
        let r = |(a, b): (usize, usize)| self.apply(a, b);
        for x in 0..self.size {
            for y in 0..self.size {
                for z in 0..self.size {
                    // left side: R12, R23, R12
                    let (a, b) = r((x, y));
                    let (c, d) = r((b, z));
                    let (e, f) = r((a, c));
                    let lhs = (e, f, d);
                    // right side: R23, R12, R23
                    let (g, h) = r((y, z));
                    let (i, j) = r((x, g));
                    let (k, l) = r((j, h));
                    let rhs = (i, k, l);
                    if lhs != rhs {
                        return Err(Error::NotYangBaxter { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// The same equation written out componentwise, as three identities in
    /// R1 and R2.  Used to cross-check `verify_ybe`; the two must agree.
    pub fn componentwise_ybe_witness(&self) -> Option<(usize, usize, usize)> {
        let r1 = |x, y| self.r1(x, y);
        let r2 = |x, y| self.r2(x, y);
        for a in 0..self.size {
            for b in 0..self.size {
                for c in 0..self.size {
                    let eq1 = r1(r1(a, b), r1(r2(a, b), c)) == r1(a, r1(b, c));
                    let eq2 = r2(r1(a, b), r1(r2(a, b), c)) == r1(r2(a, r1(b, c)), r2(b, c));
                    let eq3 = r2(r2(a, b), c) == r2(r2(a, r1(b, c)), r2(b, c));
                    if !(eq1 && eq2 && eq3) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn left_fibers_unique(&self) -> bool {
        // y -> R1(x, y) must be a bijection for every x
        (0..self.size).all(|x| {
            let mut seen = vec![false; self.size];
            (0..self.size).all(|y| {
                let v = self.r1(x, y);
                !std::mem::replace(&mut seen[v], true)
            })
        })
    }

    fn right_fibers_unique(&self) -> bool {
        // x -> R2(x, y) must be a bijection for every y
        (0..self.size).all(|y| {
            let mut seen = vec![false; self.size];
            (0..self.size).all(|x| {
                let v = self.r2(x, y);
                !std::mem::replace(&mut seen[v], true)
            })
        })
    }

    pub fn is_birack(&self) -> bool {
        self.left_fibers_unique() && self.right_fibers_unique()
    }

    /// The unique y with R1(x, y) = z, when it exists.
    pub fn left_solve(&self, x: usize, z: usize) -> Option<usize> {
        let mut found = None;
        for y in 0..self.size {
            if self.r1(x, y) == z {
                if found.is_some() {
                    return None;
                }
                found = Some(y);
            }
        }
        found
    }

    /// The unique x with R2(x, y) = w, when it exists.
    pub fn right_solve(&self, y: usize, w: usize) -> Option<usize> {
        let mut found = None;
        for x in 0..self.size {
            if self.r2(x, y) == w {
                if found.is_some() {
                    return None;
                }
                found = Some(x);
            }
        }
        found
    }

    /// Number of x with R(x, a) = (x, a).
    fn fixed_into(&self, a: usize) -> usize {
        (0..self.size)
            .filter(|&x| self.apply(x, a) == (x, a))
            .count()
    }

    /// Number of y with R(a, y) = (a, y).
    fn fixed_from(&self, a: usize) -> usize {
        (0..self.size)
            .filter(|&y| self.apply(a, y) == (a, y))
            .count()
    }

    /// Birack / biquandle classification.  The two fixed-pair readings of
    /// the kink condition must agree on a birack; a disagreement means the
    /// tables do not describe a coherent structure and is reported as such.
    pub fn classify(&self) -> Result<StructureClass> {
        if !self.is_birack() {
            return Ok(StructureClass::YangBaxterSet);
        }
        let left = (0..self.size).all(|a| self.fixed_into(a) == 1);
        let right = (0..self.size).all(|a| self.fixed_from(a) == 1);
        if left != right {
            let element = (0..self.size)
                .find(|&a| (self.fixed_into(a) == 1) != (self.fixed_from(a) == 1))
                .unwrap_or(0);
            return Err(Error::TypeIInconsistent { element });
        }
        Ok(if left {
            StructureClass::Biquandle
        } else {
            StructureClass::Birack
        })
    }
}

/// R(x,y) = (x,y).  A Yang-Baxter solution that is not a birack; useful as
/// a negative classification fixture.
pub fn identity_operator(n: usize) -> YBOperator {
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = x;
            r2[x * n + y] = y;
        }
    }
    YBOperator::new(n, r1, r2).expect("identity tables are invertible")
}

/// R(x,y) = (y,x), the transposition solution.
pub fn swap_operator(n: usize) -> YBOperator {
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = y;
            r2[x * n + y] = x;
        }
    }
    YBOperator::new(n, r1, r2).expect("swap tables are invertible")
}

/// R(x,y) = (y+1, x-1) on Z/n.
pub fn cyclic_operator(n: usize) -> YBOperator {
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = (y + 1) % n;
            r2[x * n + y] = (x + n - 1) % n;
        }
    }
    YBOperator::new(n, r1, r2).expect("cyclic tables are invertible")
}

/// R(x,y) = (y, x+1) on Z/2: a birack whose kink condition fails, so it is
/// not a biquandle.
pub fn birack_not_biquandle_z2() -> YBOperator {
    let n = 2;
    let mut r1 = vec![0; 4];
    let mut r2 = vec![0; 4];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = y;
            r2[x * n + y] = (x + 1) % n;
        }
    }
    YBOperator::new(n, r1, r2).expect("tables are invertible")
}

/// Validates quandle axioms for a binary operation table (x * y at
/// x * n + y) and lifts it to R(x,y) = (y, x * y).
pub fn from_quandle(n: usize, star: &[usize]) -> Result<YBOperator> {
    if star.len() != n * n {
        return Err(Error::TableShape {
            expected: n * n,
            got: star.len(),
        });
    }
    let s = |x: usize, y: usize| star[x * n + y];
    for x in 0..n {
        if s(x, x) != x {
            return Err(Error::QuandleAxiom {
                axiom: "idempotence",
                witness: format!("{x} * {x} = {}", s(x, x)),
            });
        }
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let v = s(x, y);
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::QuandleAxiom {
                    axiom: "right translation bijectivity",
                    witness: format!("x -> x * {y} repeats value {v}"),
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if s(s(x, y), z) != s(s(x, z), s(y, z)) {
                    return Err(Error::QuandleAxiom {
                        axiom: "self-distributivity",
                        witness: format!("({x},{y},{z})"),
                    });
                }
            }
        }
    }
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = y;
            r2[x * n + y] = s(x, y);
        }
    }
    YBOperator::new(n, r1, r2)
}

/// Dihedral quandle x * y = 2y - x on Z/n, lifted to an operator.
pub fn dihedral_operator(n: usize) -> YBOperator {
    let star: Vec<usize> = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            (2 * y + n - x % n + n) % n
        })
        .collect();
    from_quandle(n, &star).expect("dihedral table satisfies the quandle axioms")
}

/// R(x,y) = ((1-a)x + ay, bx + (1-b)y) on Z/n.  Requires a, b invertible
/// and (1-a)(1-b) = 0 mod n.
pub fn alexander_operator(n: usize, a: u64, b: u64) -> Result<YBOperator> {
    let nu = n as u64;
    let a = a % nu;
    let b = b % nu;
    if crate::modular::inv_mod(a, nu).is_none() {
        return Err(Error::AlexanderParams {
            reason: format!("alpha = {a} is not invertible mod {n}"),
        });
    }
    if crate::modular::inv_mod(b, nu).is_none() {
        return Err(Error::AlexanderParams {
            reason: format!("beta = {b} is not invertible mod {n}"),
        });
    }
    let one_minus = |v: u64| (1 + nu - v % nu) % nu;
    if one_minus(a) * one_minus(b) % nu != 0 {
        return Err(Error::AlexanderParams {
            reason: format!(
                "(1 - alpha)(1 - beta) = {} mod {n}, expected 0",
                one_minus(a) * one_minus(b) % nu
            ),
        });
    }
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let xu = x as u64;
            let yu = y as u64;
            r1[x * n + y] = ((one_minus(a) * xu + a * yu) % nu) as usize;
            r2[x * n + y] = ((b * xu + one_minus(b) * yu) % nu) as usize;
        }
    }
    YBOperator::new(n, r1, r2)
}

/// A finite group given by its multiplication table, for the two Wada
/// constructions.  Element 0 must be the identity.
#[derive(Debug, Clone)]
pub struct Group {
    size: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl Group {
    pub fn new(size: usize, mul: Vec<usize>) -> Result<Self> {
        if mul.len() != size * size {
            return Err(Error::TableShape {
                expected: size * size,
                got: mul.len(),
            });
        }
        let m = |x: usize, y: usize| mul[x * size + y];
        for x in 0..size {
            if m(0, x) != x || m(x, 0) != x {
                return Err(Error::QuandleAxiom {
                    axiom: "group identity",
                    witness: format!("element {x}"),
                });
            }
        }
        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(Error::QuandleAxiom {
                            axiom: "associativity",
                            witness: format!("({x},{y},{z})"),
                        });
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; size];
        for x in 0..size {
            match (0..size).find(|&y| m(x, y) == 0 && m(y, x) == 0) {
                Some(y) => inv[x] = y,
                None => {
                    return Err(Error::QuandleAxiom {
                        axiom: "group inverses",
                        witness: format!("element {x}"),
                    })
                }
            }
        }
        Ok(Group { size, mul, inv })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn cyclic(n: usize) -> Group {
        let mul: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Group::new(n, mul).expect("cyclic table is a group")
    }

    /// S3 with elements indexed by their one-line notation in lexicographic
    /// order: 012, 021, 102, 120, 201, 210.  Product p * q acts as p after q.
    pub fn symmetric_3() -> Group {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let mut mul = vec![0; 36];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let composed = [p[q[0]], p[q[1]], p[q[2]]];
                mul[i * 6 + j] = index(&composed);
            }
        }
        Group::new(6, mul).expect("s3 table is a group")
    }
}

/// Wada's first solution on a group: R(x,y) = (y^{-1}, y x y).
pub fn wada_a_operator(g: &Group) -> YBOperator {
    let n = g.size();
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = g.inv(y);
            r2[x * n + y] = g.mul(g.mul(y, x), y);
        }
    }
    YBOperator::new(n, r1, r2).expect("wada tables are invertible")
}

/// Wada's second solution: R(x,y) = (x^{-1} y^{-1} x, y^2 x).
pub fn wada_b_operator(g: &Group) -> YBOperator {
    let n = g.size();
    let mut r1 = vec![0; n * n];
    let mut r2 = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            r1[x * n + y] = g.mul(g.mul(g.inv(x), g.inv(y)), x);
            r2[x * n + y] = g.mul(g.mul(y, y), x);
        }
    }
    YBOperator::new(n, r1, r2).expect("wada tables are invertible")
}

/// A Yang-Baxter solution with a compatible twist automorphism f, meaning
/// (f x f) R = R (f x f).
#[derive(Debug, Clone)]
pub struct TwistedYBSet {
    op: YBOperator,
    twist: Perm,
}

impl TwistedYBSet {
    pub fn new(op: YBOperator, twist: Perm) -> Result<Self> {
        if twist.len() != op.size() {
            return Err(Error::SizeMismatch {
                a: op.size(),
                b: twist.len(),
            });
        }
        let f = |x: usize| twist.apply(x);
        for x in 0..op.size() {
            for y in 0..op.size() {
                let (a, b) = op.apply(x, y);
                if op.apply(f(x), f(y)) != (f(a), f(b)) {
                    return Err(Error::TwistIncompatible { x, y });
                }
            }
        }
        // the same diagram for f^{-1} and for the inverse operator follows
        // formally, but the tables are small enough to just confirm
        let g = twist.inverse();
        for x in 0..op.size() {
            for y in 0..op.size() {
                let (a, b) = op.apply(x, y);
                if op.apply(g.apply(x), g.apply(y)) != (g.apply(a), g.apply(b)) {
                    return Err(Error::TwistIncompatible { x, y });
                }
                let (c, d) = op.apply_inv(x, y);
                if op.apply_inv(f(x), f(y)) != (f(c), f(d)) {
                    return Err(Error::TwistIncompatible { x, y });
                }
            }
        }
        Ok(TwistedYBSet { op, twist })
    }

    pub fn untwisted(op: YBOperator) -> Self {
        let twist = Perm::identity(op.size());
        TwistedYBSet { op, twist }
    }

    pub fn op(&self) -> &YBOperator {
        &self.op
    }

    pub fn twist(&self) -> &Perm {
        &self.twist
    }

    pub fn size(&self) -> usize {
        self.op.size()
    }

    pub fn twist_order(&self) -> u64 {
        self.twist.order()
    }

    /// f^e applied to a point, for any integer e.
    pub fn twist_pow(&self, e: i64, x: usize) -> usize {
        self.twist.pow(e).apply(x)
    }

    /// The operator T^t R : (x,y) -> (R1(x, f^t y), R2(f^{-t} x, y)).
    /// Its inverse is (x,y) -> (Rbar1(x, f^t y), Rbar2(f^{-t} x, y)), which
    /// the table inversion in `YBOperator::new` reproduces automatically.
    pub fn twisted_operator(&self, t: i64) -> YBOperator {
        let n = self.size();
        let fwd = self.twist.pow(t);
        let bwd = self.twist.pow(-t);
        let mut r1 = vec![0; n * n];
        let mut r2 = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                r1[x * n + y] = self.op.r1(x, fwd.apply(y));
                r2[x * n + y] = self.op.r2(bwd.apply(x), y);
            }
        }
        let out = YBOperator::new(n, r1, r2).expect("twisted tables stay invertible");
        debug_assert!({
            (0..n).all(|x| {
                (0..n).all(|y| {
                    out.apply_inv(x, y)
                        == (self.op.rb1(x, fwd.apply(y)), self.op.rb2(bwd.apply(x), y))
                })
            })
        });
        out
    }

    pub fn classify(&self) -> Result<StructureClass> {
        self.op.classify()
    }
}

/// Does `map` carry (src, f) to (dst, f') as twisted solutions?
pub fn is_homomorphism(src: &TwistedYBSet, dst: &TwistedYBSet, map: &[usize]) -> bool {
    if map.len() != src.size() || map.iter().any(|&v| v >= dst.size()) {
        return false;
    }
    let h = |x: usize| map[x];
    for x in 0..src.size() {
        if h(src.twist().apply(x)) != dst.twist().apply(h(x)) {
            return false;
        }
    }
    for x in 0..src.size() {
        for y in 0..src.size() {
            let (a, b) = src.op().apply(x, y);
            if dst.op().apply(h(x), h(y)) != (h(a), h(b)) {
                return false;
            }
        }
    }
    true
}

pub fn is_isomorphism(src: &TwistedYBSet, dst: &TwistedYBSet, map: &[usize]) -> bool {
    if src.size() != dst.size() {
        return false;
    }
    let mut seen = vec![false; dst.size()];
    for &v in map {
        if v >= dst.size() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    is_homomorphism(src, dst, map)
}

/// A catalogue of small twisted biquandles (carrier size <= 4) used for
/// corpus-style tests: every entry is verified to be a biquandle with a
/// compatible twist.
pub fn fixture_corpus() -> Vec<(String, TwistedYBSet)> {
    let mut out: Vec<(String, TwistedYBSet)> = Vec::new();
    let mut push = |name: String, op: YBOperator, f: Vec<usize>| {
        let twist = Perm::new(f).expect("corpus twist is a permutation");
        let tw = TwistedYBSet::new(op, twist).expect("corpus twist is compatible");
        out.push((name, tw));
    };

    // cyclic solutions with all translation twists
    for n in 2..=4usize {
        for c in 0..n {
            let f: Vec<usize> = (0..n).map(|x| (x + c) % n).collect();
            push(format!("cyclic-{n}/shift-{c}"), cyclic_operator(n), f);
        }
    }
    // dihedral quandle solutions with affine twists x -> a x + b
    for n in [3usize, 4] {
        for a in 1..n {
            if crate::modular::inv_mod(a as u64, n as u64).is_none() {
                continue;
            }
            for b in 0..n {
                let f: Vec<usize> = (0..n).map(|x| (a * x + b) % n).collect();
                push(
                    format!("dihedral-{n}/affine-{a}x+{b}"),
                    dihedral_operator(n),
                    f,
                );
            }
        }
    }
    // the alexander solution on Z/4 with alpha = beta = 3, affine twists
    for a in [1usize, 3] {
        for b in 0..4usize {
            let f: Vec<usize> = (0..4).map(|x| (a * x + b) % 4).collect();
            push(
                format!("alexander-4-3-3/affine-{a}x+{b}"),
                alexander_operator(4, 3, 3).expect("parameters are valid"),
                f,
            );
        }
    }
    // transposition solution on Z/2 with both twists
    push("swap-2/id".into(), swap_operator(2), vec![0, 1]);
    push("swap-2/flip".into(), swap_operator(2), vec![1, 0]);

    out
}
