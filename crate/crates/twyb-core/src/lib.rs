//! Finite Yang-Baxter structures carrying a compatible twist map, the
//! homology of their tuple complexes, and the region-weighted coloring
//! invariants those cocycles define.
//!
//! The crate is organized bottom-up:
//!
//! * [`modular`], [`perm`], [`matrix`], [`snf`]: exact arithmetic over
//!   Z/N, permutations, integer matrices and Smith normal form.
//! * [`yb`]: solution tables, their verification and classification
//!   (Yang-Baxter set / birack / biquandle), standard families, and
//!   twisted structures with their deformed operators.
//! * [`cochain`]: the face maps, boundary and coboundary matrices,
//!   cocycle spaces, and (co)homology summaries for the three complex
//!   variants (full, degenerate, quotient).
//! * [`extension`]: rebuilding a larger solution from a pair of
//!   2-cochains and checking which cochain data extends.
//! * [`diagram`], [`braid`]: planar diagrams with orientation recovery,
//!   face tracing, region numbering and colorings; braid closures.
//! * [`statesum`], [`groupring`]: Boltzmann weights and the resulting
//!   group-ring valued invariants, including the surface variant.
//! * [`formats`]: the text formats for structures, cochains, diagrams
//!   and surface triple data.

pub mod braid;
pub mod cochain;
pub mod diagram;
pub mod error;
pub mod extension;
pub mod formats;
pub mod groupring;
pub mod matrix;
pub mod modular;
pub mod perm;
pub mod snf;
pub mod statesum;
pub mod yb;

pub use cochain::{Cochain, CocycleSpace, FaceCtx, TwistMode, TwistParams, Variant};
pub use diagram::{Diagram, PdInput, Side};
pub use error::{Error, Result};
pub use groupring::GroupRingElement;
pub use modular::CoefficientModule;
pub use perm::Perm;
pub use yb::{StructureClass, TwistedYBSet, YBOperator};
