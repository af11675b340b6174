use thiserror::Error;

/// Everything that can go wrong while building or evaluating a structure.
///
/// Variants carry the smallest witness that demonstrates the failure so
/// callers (and test output) can point at a concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },

    #[error("table entry {value} at index {index} is out of range for carrier of size {size}")]
    EntryRange {
        index: usize,
        value: usize,
        size: usize,
    },

    #[error("R is not invertible: ({x1},{y1}) and ({x2},{y2}) map to the same pair")]
    NotInvertible {
        x1: usize,
        y1: usize,
        x2: usize,
        y2: usize,
    },

    #[error("Yang-Baxter equation fails on the triple ({x},{y},{z})")]
    NotYangBaxter { x: usize, y: usize, z: usize },

    #[error("not a permutation: value {value} repeats")]
    NotPermutation { value: usize },

    #[error("twist is incompatible with R: (f x f) o R != R o (f x f) at ({x},{y})")]
    TwistIncompatible { x: usize, y: usize },

    #[error("quandle axiom {axiom} fails at {witness}")]
    QuandleAxiom {
        axiom: &'static str,
        witness: String,
    },

    #[error("alexander parameters rejected: {reason}")]
    AlexanderParams { reason: String },

    #[error("the two type-I characterizations disagree at element {element}; structure tables are inconsistent")]
    TypeIInconsistent { element: usize },

    #[error("operation requires a biquandle, found {found}")]
    RequiresBiquandle { found: &'static str },

    #[error("operation requires a birack, found {found}")]
    RequiresBirack { found: &'static str },

    #[error("coefficient unit {unit} is not invertible modulo {modulus}")]
    UnitNotInvertible { unit: u64, modulus: u64 },

    #[error("modulus {modulus} is not supported: {reason}")]
    BadModulus { modulus: u64, reason: &'static str },

    #[error("betti numbers are defined here only for prime moduli; N = {modulus} is composite, request elementary divisors instead")]
    NonPrimeBetti { modulus: u64 },

    #[error("map is not T-equivariant: value at f-image of tuple {tuple:?} differs from u times the value")]
    NotEquivariant { tuple: Vec<usize> },

    #[error("cochain degree {got}, expected {expected}")]
    CochainDegree { expected: usize, got: usize },

    #[error("cochain does not vanish on the degenerate tuple {tuple:?}")]
    DegenerateSupport { tuple: Vec<usize> },

    #[error("cocycle condition fails on tuple {tuple:?}")]
    NotCocycle { tuple: Vec<usize> },

    #[error(
        "problem size {size} exceeds the guard {guard}; raise the guard explicitly if intended"
    )]
    SizeGuard { size: usize, guard: usize },

    #[error("integer overflow during exact arithmetic ({context})")]
    Overflow { context: &'static str },

    #[error("{file}:{line}:{col}: {msg}")]
    Parse {
        file: String,
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("semiarc {semiarc} occurs {count} times, expected exactly 2")]
    SemiarcCount { semiarc: usize, count: usize },

    #[error("diagram orientation conflict at semiarc {semiarc}")]
    OrientationConflict { semiarc: usize },

    #[error("face count {faces} violates Euler's formula for a connected planar diagram with {crossings} crossings (expected {expected}); diagram is non-planar or split")]
    NonPlanar {
        crossings: usize,
        faces: usize,
        expected: usize,
    },

    #[error("alexander numbering inconsistent across semiarc {semiarc}")]
    NumberingInconsistent { semiarc: usize },

    #[error("outer-region directive names semiarc {semiarc}, which does not exist")]
    BadOuterDirective { semiarc: usize },

    #[error("braid letter {letter} is out of range for {strands} strands")]
    BadBraidLetter { letter: i64, strands: usize },

    #[error("twist order {order} does not match requested period {p}")]
    PeriodMismatch { order: u64, p: u64 },

    #[error("state-sum weight map failed validation: {reason}")]
    BadWeightMap { reason: String },

    #[error("extension data rejected: {reason}")]
    ExtensionRejected { reason: String },

    #[error("carriers have different sizes ({a} vs {b})")]
    SizeMismatch { a: usize, b: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
