use num_rational::Ratio;

use super::ClassSumCombo;
use crate::numtheory::{gcd, Factorization};
use crate::{Error, Result};

/// Exact rational coefficient.
pub type RationalCoeff = Ratio<i64>;

/// Largest class-sum order accepted by the closed-form products, so that
/// `q * r` always fits in a `u64`.
pub const RING_ORDER_MAX: u64 = 1 << 32;

fn check_order(q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::invalid("class sum orders start at 1"));
    }
    if q > RING_ORDER_MAX {
        return Err(Error::OutOfRange {
            value: q,
            limit: RING_ORDER_MAX,
        });
    }
    Ok(())
}

/// `(d, d')` with `d = gcd(q, r)` and `d'` the largest divisor of `d` coprime
/// to both `q/d` and `r/d`.
pub fn d_prime(q: u64, r: u64) -> Result<(u64, u64)> {
    check_order(q)?;
    check_order(r)?;
    let d = gcd(q, r);
    let cofactor = (q / d) * (r / d);
    // strip every prime of the cofactor out of d
    let mut dp = d;
    loop {
        let g = gcd(dp, cofactor);
        if g == 1 {
            break;
        }
        dp /= g;
    }
    Ok((d, dp))
}

/// `c(d', e) = prod_{p | d', p not dividing e} (1 - 1/(p - 1))`.
pub fn c_coeff(dp: u64, e: u64) -> Result<RationalCoeff> {
    if dp == 0 || e == 0 || dp % e != 0 {
        return Err(Error::invalid(format!("c(d', e) needs e | d', got d' = {dp}, e = {e}")));
    }
    let f = Factorization::trial(dp)?;
    let mut c = Ratio::from_integer(1i64);
    for p in f.primes().filter(|p| e % p != 0) {
        let p = p as i64;
        c *= Ratio::new(p - 2, p - 1);
    }
    Ok(c)
}

/// `F_q * F_r` from the closed form
/// `phi(d) * sum_{e | d'} c(d', e) F_{qr/(de)}`.
pub fn fq_product(q: u64, r: u64) -> Result<ClassSumCombo> {
    let (d, dp) = d_prime(q, r)?;
    let phi_d = i64::try_from(Factorization::trial(d)?.euler_phi())
        .map_err(|_| Error::Overflow("fq_product"))?;
    let qr_over_d = (q / d) * r;
    let mut terms = Vec::new();
    for e in Factorization::trial(dp)?.divisors()? {
        let coeff = c_coeff(dp, e)? * phi_d;
        if !coeff.is_integer() || coeff < Ratio::from_integer(0) {
            return Err(Error::InvariantViolation(format!(
                "coefficient {coeff} of F_{} in F_{q} * F_{r} is not a nonnegative integer",
                qr_over_d / e
            )));
        }
        terms.push((qr_over_d / e, coeff.to_integer()));
    }
    ClassSumCombo::from_terms(terms)
}

/// Products of class sums of powers of one prime:
/// `F_{p^a} F_{p^b} = phi(p^a) F_{p^b}` when `a < b`, and
/// `phi(p^a) (F_1 + F_p + ... + F_{p^a}) - p^(a-1) F_{p^a}` when `a = b`.
pub fn fq_power_prime(p: u64, alpha: u32, beta: u32) -> Result<ClassSumCombo> {
    if p < 2 || Factorization::trial(p)?.factors() != [(p, 1)] {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if alpha == 0 || alpha > beta {
        return Err(Error::invalid(format!(
            "need 1 <= alpha <= beta, got alpha = {alpha}, beta = {beta}"
        )));
    }
    let overflow = || Error::Overflow("fq_power_prime");
    let pb = p.checked_pow(beta).ok_or_else(overflow)?;
    if pb > RING_ORDER_MAX {
        return Err(Error::OutOfRange {
            value: pb,
            limit: RING_ORDER_MAX,
        });
    }
    let pa_1 = p.pow(alpha - 1) as i64;
    let phi_pa = pa_1 * (p as i64 - 1);
    if alpha < beta {
        return ClassSumCombo::from_terms([(pb, phi_pa)]);
    }
    let mut terms: Vec<(u64, i64)> = (0..=alpha).map(|i| (p.pow(i), phi_pa)).collect();
    terms.push((pb, -pa_1));
    ClassSumCombo::from_terms(terms)
}

/// `F_q * F_r` for squarefree `q, r`:
/// `phi(d) * sum_{e | d} prod_{p | e} (p - 2)/(p - 1) F_{q r e / d^2}`.
pub fn fq_product_squarefree(q: u64, r: u64) -> Result<ClassSumCombo> {
    check_order(q)?;
    check_order(r)?;
    for x in [q, r] {
        if !Factorization::trial(x)?.is_squarefree() {
            return Err(Error::invalid(format!("{x} is not squarefree")));
        }
    }
    let d = gcd(q, r);
    let df = Factorization::trial(d)?;
    let phi_d = df.euler_phi() as i64;
    let base = (q / d) * (r / d);
    let mut terms = Vec::new();
    for e in df.divisors()? {
        let weight = Factorization::trial(e)?
            .primes()
            .fold(Ratio::from_integer(phi_d), |acc, p| {
                acc * Ratio::new(p as i64 - 2, p as i64 - 1)
            });
        if !weight.is_integer() {
            return Err(Error::InvariantViolation(format!(
                "coefficient {weight} of F_{} in F_{q} * F_{r} is not an integer",
                base * e
            )));
        }
        terms.push((base * e, weight.to_integer()));
    }
    ClassSumCombo::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_ring::{class_sum, collapse, dense_multiply};

    fn combo(terms: &[(u64, i64)]) -> ClassSumCombo {
        ClassSumCombo::from_terms(terms.iter().copied()).unwrap()
    }

    fn dense_oracle(q: u64, r: u64) -> ClassSumCombo {
        let x = class_sum(q).unwrap();
        let y = class_sum(r).unwrap();
        collapse(&dense_multiply(&x, &y).unwrap()).unwrap()
    }

    /// d' by its defining property: the largest divisor of d coprime to q/d and r/d.
    fn d_prime_brute(q: u64, r: u64) -> u64 {
        let d = gcd(q, r);
        (1..=d)
            .filter(|&t| d % t == 0 && gcd(t, q / d) == 1 && gcd(t, r / d) == 1)
            .max()
            .unwrap()
    }

    #[test]
    fn d_prime_examples() {
        assert_eq!(d_prime(4, 2).unwrap(), (2, 1));
        assert_eq!(d_prime(6, 6).unwrap(), (6, 6));
        assert_eq!(d_prime(12, 18).unwrap(), (6, 1));
        assert!(d_prime(0, 3).is_err());
        assert!(matches!(
            d_prime(RING_ORDER_MAX + 1, 3),
            Err(Error::OutOfRange { .. })
        ));
        for q in 1..=60 {
            for r in 1..=60 {
                assert_eq!(d_prime(q, r).unwrap().1, d_prime_brute(q, r), "({q}, {r})");
            }
        }
    }

    #[test]
    fn c_coeff_examples() {
        assert_eq!(c_coeff(1, 1).unwrap(), Ratio::from_integer(1));
        assert_eq!(c_coeff(2, 1).unwrap(), Ratio::from_integer(0));
        assert_eq!(c_coeff(6, 2).unwrap(), Ratio::new(1, 2));
        assert_eq!(c_coeff(35, 1).unwrap(), Ratio::new(3 * 5, 4 * 6));
        assert!(matches!(c_coeff(6, 4), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn fq_product_examples() {
        assert_eq!(fq_product(2, 3).unwrap(), combo(&[(6, 1)]));
        assert_eq!(fq_product(2, 2).unwrap(), combo(&[(1, 1)]));
        assert_eq!(fq_product(3, 3).unwrap(), combo(&[(1, 2), (3, 1)]));
        assert_eq!(fq_product(12, 18).unwrap(), combo(&[(36, 2)]));
        for (q, r) in [(2, 3), (2, 2), (3, 3), (12, 18), (9, 6), (30, 30)] {
            assert_eq!(fq_product(q, r).unwrap(), dense_oracle(q, r), "({q}, {r})");
        }
    }

    #[test]
    fn power_prime_examples() {
        assert_eq!(fq_power_prime(2, 1, 2).unwrap(), combo(&[(4, 1)]));
        assert_eq!(fq_power_prime(3, 1, 1).unwrap(), combo(&[(1, 2), (3, 1)]));
        let sq4 = fq_power_prime(2, 2, 2).unwrap();
        assert_eq!(sq4, combo(&[(1, 2), (2, 2)]));
        assert_eq!(sq4, dense_oracle(4, 4));
        assert!(matches!(fq_power_prime(2, 3, 2), Err(Error::InvalidArgument(_))));
        assert!(matches!(fq_power_prime(4, 1, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(fq_power_prime(2, 0, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(fq_product_squarefree(6, 6).unwrap(), combo(&[(1, 2), (3, 1)]));
        assert_eq!(fq_product_squarefree(2, 3).unwrap(), combo(&[(6, 1)]));
        assert_eq!(
            fq_product_squarefree(15, 15).unwrap(),
            fq_product(15, 15).unwrap()
        );
        assert!(matches!(
            fq_product_squarefree(4, 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn oracle_sweep_small() {
        for q in 1..=40 {
            for r in 1..=40 {
                let combo = fq_product(q, r).unwrap();
                assert_eq!(combo, dense_oracle(q, r), "({q}, {r})");
                for (order, _) in combo.iter() {
                    assert_eq!((q * r) % order, 0);
                }
            }
        }
    }

    #[test]
    fn coprime_cofactor_gives_single_term() {
        for q in 1..=120 {
            for r in 1..=120 {
                let (d, dp) = d_prime(q, r).unwrap();
                if dp == 1 {
                    let phi = Factorization::trial(d).unwrap().euler_phi() as i64;
                    assert_eq!(fq_product(q, r).unwrap(), combo(&[(q * r / d, phi)]));
                }
            }
        }
    }
}
