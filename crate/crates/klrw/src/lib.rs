//! Exact-arithmetic toolkit for steadied quotients of KLRW algebras in
//! affine type A.
//!
//! The crate is organised around the data that determines such a quotient:
//! a Cartan datum of type `A^(1)_{e-1}` ([`cartan`]), the affine Weyl group
//! acting on roots and pressure functions ([`weyl`]), rational pressure
//! functions and their Scopes chamber data ([`pressure`]), the idempotent
//! combinatorics of piecewise-linear envelopes and slope data
//! ([`combinatorics`]), the steadying ideal's idempotent tests
//! ([`steadying`]), an exact rewriting engine for diagram products, ideal
//! slices and graded dimensions ([`engine`]), and RoCK-chamber reference
//! data ([`rock`]).
//!
//! All arithmetic is exact: integer vectors on the root lattice, arbitrary
//! precision rationals for pressures, and linear algebra over the rationals
//! or a prime field inside the engine.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line front end live in the companion `klrw-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod cartan;
pub mod combinatorics;
pub mod engine;
pub mod pressure;
pub mod rock;
pub mod steadying;
pub mod weyl;

pub use cartan::{CartanDatum, CartanKind, RootClass, RootVec, Weight, WeightPoint};
pub use combinatorics::{Idem, PLFunction, SlopeDatum};
pub use pressure::{ChamberSignature, Pressure};
pub use weyl::WeylWord;

/// Convenience constructor for exact rationals, used pervasively in tests
/// and by the CLI parser.
pub fn rational(num: i64, den: i64) -> num_rational::BigRational {
    use num_bigint::BigInt;
    num_rational::BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational written as `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<num_rational::BigRational> {
    use num_bigint::BigInt;
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(num_rational::BigRational::new(n, d))
}

/// Format a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &num_rational::BigRational) -> alloc::string::String {
    use alloc::format;
    use num_traits::One;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
