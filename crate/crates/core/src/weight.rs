use std::fmt;
use std::ops::Add;

use serde::Serialize;

/// Edge weight. Exact non-negative integer.
pub type Weight = u64;

/// Comparison key for paths: total weight first, then edge count.
///
/// Because every edge adds one to `len`, a proper subpath always compares
/// strictly smaller than the path containing it, even across zero-weight
/// edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct PathWeight {
    pub wt: Weight,
    pub len: u32,
}

impl PathWeight {
    pub const ZERO: PathWeight = PathWeight { wt: 0, len: 0 };

    pub fn new(wt: Weight, len: u32) -> Self {
        PathWeight { wt, len }
    }

    /// Weight of this path extended by one edge of weight `w`.
    #[inline]
    pub fn extend(self, w: Weight) -> Self {
        PathWeight {
            wt: self.wt + w,
            len: self.len + 1,
        }
    }
}

impl Add for PathWeight {
    type Output = PathWeight;

    fn add(self, rhs: PathWeight) -> PathWeight {
        PathWeight {
            wt: self.wt + rhs.wt,
            len: self.len + rhs.len,
        }
    }
}

impl fmt::Display for PathWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.wt, self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_weight_edge_still_increases_key() {
        let p = PathWeight::new(5, 2);
        assert!(p.extend(0) > p);
    }

    proptest! {
        #[test]
        fn extension_is_strictly_monotone(wt in 0u64..1_000_000, len in 0u32..1000, w in 0u64..1000) {
            let p = PathWeight::new(wt, len);
            prop_assert!(p.extend(w) > p);
        }

        #[test]
        fn order_is_lexicographic(a in (0u64..5, 0u32..5), b in (0u64..5, 0u32..5)) {
            let pa = PathWeight::new(a.0, a.1);
            let pb = PathWeight::new(b.0, b.1);
            prop_assert_eq!(pa.cmp(&pb), a.cmp(&b));
        }
    }
}
