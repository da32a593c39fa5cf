//! Certified numerics for the stability regions of truncated exponential series.
//!
//! The crate is `no_std` (with `alloc`). Everything that touches files, threads,
//! or the command line lives in the companion `taylorstab` crate.
//!
//! Module map:
//!
//! * [`exactnum`]: exact rationals, dyadic numbers, outward-rounded interval
//!   arithmetic, elementary functions and the Lambert W function.
//! * [`taylorpoly`]: constructors for the polynomial families (partial sums,
//!   scaled sums, `T_n`, the imaginary-axis polynomials `E_n`, `f_m`, and the
//!   bivariate modulus polynomial `G_n`).
//! * [`rootiso`]: square-free decomposition and Descartes-rule real root isolation.
//! * [`region`]: membership, imaginary-axis slices, boundary traces, radial slices
//!   and float-grade complex zeros.
//! * [`extremal`]: interval branch-and-bound certificates for extremal radii.
//! * [`szego`]: geometry of the Szegő region and the auxiliary bounds.
//! * [`verify`]: named regression checks assembled into a report.

#![no_std]

extern crate alloc;

pub mod exactnum;
pub mod extremal;
pub mod region;
pub mod rootiso;
pub mod szego;
pub mod taylorpoly;
pub mod verify;

mod error;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
