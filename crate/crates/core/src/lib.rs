//! Equable and amicable polygons on the integer lattice.
//!
//! Two polygons are *amicable* when the area of each equals the perimeter of
//! the other; a polygon is *equable* when its own area equals its perimeter.
//! This crate enumerates and certifies both kinds for lattice triangles and
//! rectangles using exact integer arithmetic only:
//!
//! - [`lattice`]: shoelace twice-areas, Pick counts, squared side lengths.
//! - [`radical`]: when a sum of square roots of integers is rational.
//! - [`rectangles`]: closed-form partner solving, divisor enumeration and an
//!   exhaustive oracle. There are exactly five amicable rectangle pairs.
//! - [`triangles`]: heronian enumeration, the amicable pair
//!   (3, 25, 26) ↔ (9, 12, 15), equable triangles, lattice embeddings.
//! - [`search`] and [`report`]: fingerprint matching and verified reports.
//! - [`runs`] and [`verify`]: complete searches and the full check suite.

pub mod lattice;
pub mod radical;
pub mod rectangles;
pub mod report;
pub mod runs;
pub mod search;
pub mod triangles;
pub mod verify;

pub use lattice::{GeometryError, LatticePoint, LatticePolygon, Simplicity, Symmetry};
pub use radical::{radical_sum_is_rational, RadicalError, RadicalSum};
pub use rectangles::{RectAmicablePair, RectError, RectSides};
pub use report::{Family, SearchReport};
pub use search::{match_amicable, AmicablePair, SearchError, ShapeFingerprint, ShapeId};
pub use triangles::{
    HeronianTriangle, TriangleEmbedding, TriangleError, TrianglePair, TriangleSides,
};
