//! Duality for finite-dimensional coinvolutive Hopf-von Neumann algebras.
//!
//! An algebra `M` carries a comultiplication `Delta: M -> M (x) M` and a
//! coinvolution `kappa`. Its predual `M_*` is a convolution *-algebra; the
//! dual `M^` is the enveloping algebra of the part of `M_*` on which every
//! irreducible representation is *standard*. No Haar weight is used anywhere.
//!
//! In finite dimensions every von Neumann algebra is a direct sum of full
//! matrix blocks, so all algebras here are stored in block form with the
//! matrix-unit basis and all maps are explicit matrices over that basis.
//!
//! ```
//! use std::sync::Arc;
//! use hopfdual::{duality, groups};
//!
//! let g = groups::GroupSpec::parse(r#"{"type":"sym","n":3}"#)?.group()?;
//! let m = Arc::new(groups::function_algebra(&g));
//! let dc = duality::dualize(m.clone(), 0x5EED)?;
//! assert_eq!(dc.dual.signature(), vec![1, 1, 2]);
//! assert!(duality::is_reflexive(m, 0x5EED)?.reflexive);
//! # Ok::<(), hopfdual::Error>(())
//! ```

pub mod algebra;
pub mod cli;
pub mod duality;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod predual;
pub mod reps;

pub use error::{Error, Result};
