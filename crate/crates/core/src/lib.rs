//! Coadjoint orbits of `G_n = U(n) ⋉ H_n`, convergence of orbit sequences,
//! and the unitary-dual side computations that mirror them.

pub mod coadjoint;
pub mod fock;
pub mod inverse_spectral;
pub mod matrix;
pub mod quadrature;
pub mod sphere;
pub mod topology;
pub mod weights;

pub use num_complex::Complex64;
