//! Jet schemes of affine schemes, computed as explicit weighted-homogeneous
//! ideals, together with the exact Gröbner-basis machinery needed to study
//! them: membership, elimination, saturation, Krull dimension and singular
//! loci.

pub mod analysis;
pub mod groebner;
pub mod jets;
pub mod par;
pub mod polyring;

pub use groebner::{Budget, DimReport, GroebnerError, Ideal};
pub use polyring::{Coeff, Field, Monomial, MonomialOrder, Poly, PolyRing, RingError, RingMap};
