pub mod matpoly;

pub use matpoly::MatrixPolynomial;
