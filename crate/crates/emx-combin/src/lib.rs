//! Exact combinatorial enumeration: spanning trees and two-component forests
//! of grid-like graphs, almost-diagonal matrix determinant/permanent families,
//! and parking-function statistics.

pub mod diagmat;
pub mod parking;
pub mod spanning;
