//! Convex bodies on the unit 2-sphere: lunes, width, thickness, diameter,
//! constant-width, strict-convexity and reducedness checks, exact
//! constructors for standard body families, and randomized property suites.

pub mod body;
pub mod curve;
pub mod gallery;
pub mod optimize;
pub mod sphere;
pub mod verifier;
pub mod width;

pub use body::{Body, BodyError, BoundaryArc, CircleArc};
pub use sphere::{distance, GreatArc, Hemisphere, Lune, SpherePoint, Vec3};
pub use width::{thickness, width_at, Certificate, WidthWitness};
