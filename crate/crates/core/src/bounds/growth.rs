//! Monotone growth functions `f: ℕ_{>0} → ℕ` bounding antichain degrees.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GrowthFunction {
    /// `f(i) = s + i - 1`.
    Arithmetic {
        #[serde(with = "crate::report::decimal")]
        s: BigUint,
    },
    /// `g(1) = r`, `g(i) = i + r - 2` for `i >= 2`.
    PaperG {
        #[serde(with = "crate::report::decimal")]
        r: BigUint,
    },
    /// `f(i) = 2^i · r`.
    Doubling {
        #[serde(with = "crate::report::decimal")]
        r: BigUint,
    },
    /// `g_n`: on `(offset_j, offset_j + ...]` it is `PaperG(r_j)` at the local
    /// position `i - offset_j`. Offsets strictly increase from 0.
    PiecewiseGn { segments: Vec<Segment> },
    /// Explicit values `f(1), f(2), ...`; undefined past the end.
    Table {
        #[serde(with = "crate::report::decimal_vec")]
        values: Vec<BigUint>,
    },
    /// `f(i) = base(i + offset)`.
    Shifted {
        base: Box<GrowthFunction>,
        #[serde(with = "crate::report::decimal")]
        offset: BigUint,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    #[serde(with = "crate::report::decimal")]
    pub offset: BigUint,
    #[serde(with = "crate::report::decimal")]
    pub r: BigUint,
}

fn paper_g(r: &BigUint, i: &BigUint) -> BigUint {
    if i.is_one() {
        r.clone()
    } else {
        i + r - 2u32
    }
}

impl GrowthFunction {
    pub fn arithmetic(s: impl Into<BigUint>) -> Self {
        GrowthFunction::Arithmetic { s: s.into() }
    }

    pub fn paper_g(r: impl Into<BigUint>) -> Self {
        GrowthFunction::PaperG { r: r.into() }
    }

    pub fn doubling(r: impl Into<BigUint>) -> Self {
        GrowthFunction::Doubling { r: r.into() }
    }

    pub fn table(values: Vec<BigUint>) -> Result<Self> {
        if let Some(pos) = values.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::NotMonotone(pos + 2));
        }
        Ok(GrowthFunction::Table { values })
    }

    pub fn piecewise(segments: Vec<Segment>) -> Result<Self> {
        if segments.first().map(|s| !s.offset.is_zero()).unwrap_or(true) {
            return Err(Error::InvalidArgument("the first segment must start at offset 0".into()));
        }
        if let Some(pos) = segments.windows(2).position(|w| w[1].offset <= w[0].offset) {
            return Err(Error::InvalidArgument(format!("segment offsets must increase (segment {})", pos + 2)));
        }
        Ok(GrowthFunction::PiecewiseGn { segments })
    }

    pub fn shifted(self, offset: impl Into<BigUint>) -> Self {
        let offset = offset.into();
        if offset.is_zero() {
            return self;
        }
        match self {
            GrowthFunction::Shifted { base, offset: inner } => GrowthFunction::Shifted { base, offset: inner + offset },
            base => GrowthFunction::Shifted { base: Box::new(base), offset },
        }
    }

    /// `f(i)` for `i >= 1`.
    pub fn eval(&self, i: &BigUint, limits: &Limits) -> Result<BigUint> {
        if i.is_zero() {
            return Err(Error::GrowthOutOfRange("0".into()));
        }
        match self {
            GrowthFunction::Arithmetic { s } => Ok(s + i - 1u32),
            GrowthFunction::PaperG { r } => Ok(paper_g(r, i)),
            GrowthFunction::Doubling { r } => {
                if r.is_zero() {
                    return Ok(BigUint::zero());
                }
                let context = || format!("2^{i}·{r}");
                let e = i.to_u64().ok_or_else(|| Error::exceeds(context(), limits.bit_cap))?;
                limits.check_bits(e.saturating_add(r.bits()), context)?;
                Ok(r << e)
            }
            GrowthFunction::PiecewiseGn { segments } => {
                let seg = segments.iter().rev().find(|s| &s.offset < i).expect("first offset is 0");
                Ok(paper_g(&seg.r, &(i - &seg.offset)))
            }
            GrowthFunction::Table { values } => i
                .to_usize()
                .and_then(|k| values.get(k - 1))
                .cloned()
                .ok_or_else(|| Error::GrowthOutOfRange(i.to_string())),
            GrowthFunction::Shifted { base, offset } => base.eval(&(i + offset), limits),
        }
    }

    /// Some `i0` with `f(i+1) - f(i) = 1` for every `i >= i0`, when one exists.
    pub fn unit_slope_from(&self) -> Option<BigUint> {
        match self {
            GrowthFunction::Arithmetic { .. } => Some(BigUint::one()),
            GrowthFunction::PaperG { .. } => Some(BigUint::from(2u32)),
            GrowthFunction::PiecewiseGn { segments } => segments.last().map(|s| &s.offset + 2u32),
            GrowthFunction::Shifted { base, offset } => base.unit_slope_from().map(|i0| {
                if i0 > offset + 1u32 {
                    i0 - offset
                } else {
                    BigUint::one()
                }
            }),
            GrowthFunction::Doubling { .. } | GrowthFunction::Table { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn values(f: &GrowthFunction, upto: u64) -> Vec<u64> {
        let limits = Limits::default();
        (1..=upto).map(|i| f.eval(&big(i), &limits).unwrap().to_u64().unwrap()).collect()
    }

    #[test]
    fn variants() {
        assert_eq!(values(&GrowthFunction::arithmetic(3u32), 4), vec![3, 4, 5, 6]);
        assert_eq!(values(&GrowthFunction::paper_g(2u32), 4), vec![2, 2, 3, 4]);
        assert_eq!(values(&GrowthFunction::paper_g(0u32), 3), vec![0, 0, 1]);
        assert_eq!(values(&GrowthFunction::doubling(3u32), 3), vec![6, 12, 24]);
        let t = GrowthFunction::table(vec![big(1), big(1), big(4)]).unwrap();
        assert_eq!(values(&t, 3), vec![1, 1, 4]);
        assert!(matches!(t.eval(&big(4), &Limits::default()), Err(Error::GrowthOutOfRange(_))));
        assert_eq!(GrowthFunction::table(vec![big(2), big(1)]), Err(Error::NotMonotone(2)));
        let s = GrowthFunction::doubling(1u32).shifted(2u32).shifted(1u32);
        assert_eq!(values(&s, 2), vec![16, 32]);
    }

    #[test]
    fn piecewise() {
        let g = GrowthFunction::piecewise(vec![
            Segment { offset: big(0), r: big(2) },
            Segment { offset: big(3), r: big(4) },
        ])
        .unwrap();
        assert_eq!(values(&g, 6), vec![2, 2, 3, 4, 4, 5]);
        assert_eq!(g.unit_slope_from(), Some(big(5)));
        assert_eq!(values(&g.clone().shifted(3u32), 2), vec![4, 4]);
        assert!(GrowthFunction::piecewise(vec![]).is_err());
    }

    #[test]
    fn doubling_respects_cap() {
        let limits = Limits::default().with_bit_cap(64);
        assert!(GrowthFunction::doubling(1u32).eval(&big(100), &limits).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = GrowthFunction::paper_g(7u32).shifted(3u32);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<GrowthFunction>(&text).unwrap(), f);
    }
}
