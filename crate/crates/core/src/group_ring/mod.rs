//! Exact arithmetic in the group ring `Z(G)`, `G = Q/Z`.
//!
//! Elements are finitely supported integer functions on `Q/Z`
//! ([`DenseElement`]) and the product is convolution through addition mod 1.
//! The class sum `F_q` is the sum of all `z^(a/q)` with `gcd(a, q) = 1`;
//! [`fq_product`] evaluates `F_q * F_r` in closed form as a combination of
//! class sums ([`ClassSumCombo`]), and [`collapse`] turns a dense product
//! back into class-sum coordinates so the two routes can be compared.

mod combo;
mod dense;
mod fraction;
mod products;

pub use combo::{collapse, ClassSumCombo};
pub use dense::{class_sum, dense_multiply, DenseElement};
pub use fraction::FareyFraction;
pub use products::{
    c_coeff, d_prime, fq_power_prime, fq_product, fq_product_squarefree, RationalCoeff,
    RING_ORDER_MAX,
};
