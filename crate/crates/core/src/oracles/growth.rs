use num_traits::{ToPrimitive, Zero};

use crate::enumerate::CountSeries;
use crate::error::{Error, Result};

/// `(n, x_n^(1/n))` for every term of the series. Raw roots only.
pub fn growth_rate_estimates(cs: &CountSeries) -> Result<Vec<(usize, f64)>> {
    cs.iter()
        .map(|(n, x)| {
            if x.is_zero() {
                return Err(Error::Domain(format!("count at n = {n} is zero")));
            }
            // ln keeps huge counts finite
            let ln = x.to_f64().map(f64::ln).filter(|v| v.is_finite()).unwrap_or_else(|| {
                let bits = x.bits();
                let shift = bits.saturating_sub(64);
                (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
            });
            Ok((n, (ln / n as f64).exp()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn constant_series() {
        let cs = CountSeries::new("ones", vec![BigUint::from(1u32); 5]);
        for (_, r) in growth_rate_estimates(&cs).unwrap() {
            assert_eq!(r, 1.0);
        }
    }

    #[test]
    fn roots() {
        let cs = CountSeries::new("pow", (1..=4).map(|n| BigUint::from(3u32).pow(n)).collect());
        for (_, r) in growth_rate_estimates(&cs).unwrap() {
            assert!((r - 3.0).abs() < 1e-12);
        }
        let zero = CountSeries::new("z", vec![BigUint::from(0u32)]);
        assert!(growth_rate_estimates(&zero).is_err());
    }
}
