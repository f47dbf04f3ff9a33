//! Isomorphism testing for Eisenstein polynomials over `Q_p`.
//!
//! * [`padic`]: exact valuations, brackets and modular inverses.
//! * [`eisenstein`]: the Krasner ultrametric, root transforms, sufficient
//!   criteria and the canonical-form classifier for degree `p`.
//! * [`ramification`]: lower and upper breaks from Newton polygons.
//! * [`tables`]: the `p^2` canonical representatives and their Galois data.
//! * [`oracle`]: brute-force root search in `O_L`, independent of the rest.

pub mod eisenstein;
pub mod error;
pub mod oracle;
pub mod padic;
pub mod poly;
pub mod ramification;
pub mod sampling;
pub mod tables;

pub use eisenstein::{
    canonical_form, classify_type, df_uf, distance, equivalent, quad_shift, scale_root,
    sufficient_equiv, type0_reduce, CanonicalRep, EisensteinPoly, Family, TypeTag,
};
pub use error::{Error, Result};
pub use padic::{Prime, ValQ};
pub use ramification::{profile, LowerBreak, RamificationProfile};
pub use tables::{galois_info, representatives, GaloisInfo};
