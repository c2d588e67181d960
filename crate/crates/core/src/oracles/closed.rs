//! Closed forms and small reference enumerators, all in exact arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain(format!("{what} is defined for n >= 1")));
    }
    Ok(())
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i + 1) afterwards
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `N(n, k) = binom(n, k) binom(n, k - 1) / n` for `1 <= k <= n`.
pub fn narayana(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("narayana({n}, {k}) needs 1 <= k <= n")));
    }
    Ok(binomial(n, k) * binomial(n, k - 1) / n)
}

/// `2^(n-1)`.
pub fn power_of_two(n: usize) -> Result<BigUint> {
    positive(n, "2^(n-1)")?;
    Ok(BigUint::one() << (n - 1))
}

/// `(3^(n-1) + 1) / 2`.
pub fn half_power_formula(n: usize) -> Result<BigUint> {
    positive(n, "(3^(n-1)+1)/2")?;
    Ok(ternary_even_twos_count(n - 1))
}

/// Ternary words of length `n` with an even number of 2's: `(3^n + 1) / 2`.
pub fn ternary_even_twos_count(n: usize) -> BigUint {
    (BigUint::from(3u32).pow(n as u32) + 1u32) / 2u32
}

/// Same count by listing all `3^n` words.
pub fn ternary_even_twos_brute(n: usize) -> u64 {
    let mut digits = vec![0u8; n];
    let mut count = 0;
    loop {
        if digits.iter().filter(|&&d| d == 2).count() % 2 == 0 {
            count += 1;
        }
        let Some(i) = digits.iter().rposition(|&d| d < 2) else {
            return count;
        };
        digits[i] += 1;
        digits[i + 1..].fill(0);
    }
}

/// The counting sum for 0112-avoiders before simplification:
/// `1 + sum_{k=1}^{n-1} binom(n-1, k) sum_{i=1}^{k} binom(k-1, k-i)`.
pub fn avoiders_0112_sum(n: usize) -> Result<BigUint> {
    positive(n, "the 0112 sum")?;
    let mut total = BigUint::one();
    for k in 1..n {
        let inner: BigUint = (1..=k).map(|i| binomial(k - 1, k - i)).sum();
        total += binomial(n - 1, k) * inner;
    }
    Ok(total)
}

/// Dyck paths of semilength `n` and height at most 5, via
/// `a(n) = 5a(n-1) - 6a(n-2) + a(n-3)` from `1, 2, 5`.
pub fn dyck_height5_count(n: usize) -> Result<BigUint> {
    positive(n, "the height-5 Dyck count")?;
    let mut a = [BigUint::one(), BigUint::from(2u32), BigUint::from(5u32)];
    if n <= 3 {
        return Ok(a[n - 1].clone());
    }
    for _ in 3..n {
        // the recurrence is positive on this range
        let next = BigUint::from(5u32) * &a[2] + &a[0] - BigUint::from(6u32) * &a[1];
        a = [a[1].clone(), a[2].clone(), next];
    }
    Ok(a[2].clone())
}

/// `sum_{k=0}^{n-1} binom(n-1, k) C_k`.
pub fn binomial_transform_catalan(n: usize) -> Result<BigUint> {
    positive(n, "the binomial transform")?;
    Ok((0..n).map(|k| binomial(n - 1, k) * catalan(k)).sum())
}

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> Result<BigUint> {
    positive(n, "bell")?;
    let mut row = vec![BigUint::one()];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let s = next.last().unwrap() + v;
            next.push(s);
        }
        row = next;
    }
    Ok(row.last().unwrap().clone())
}

/// Stirling numbers of the second kind `S(n, k)` for `k = 0..=n`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let keep = if k < m { &row[k] * k } else { BigUint::zero() };
            next[k] = keep + &row[k - 1];
        }
        row = next;
    }
    row
}
