//! Named sets of forced checkpoint values that steer the patchwork search
//! straight to a known family of solutions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Symmetry;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HintPreset {
    /// Even patchworks shaped like the solutions for 26 and 28.
    EvenFamily,
    /// Odd patchworks of the generalized pattern families.
    OddFamily,
    Double,
    PalCenterNminus1,
    PalCenterN,
}

impl HintPreset {
    pub const ALL: [HintPreset; 5] = [
        HintPreset::EvenFamily,
        HintPreset::OddFamily,
        HintPreset::Double,
        HintPreset::PalCenterNminus1,
        HintPreset::PalCenterN,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            HintPreset::EvenFamily => "even-family",
            HintPreset::OddFamily => "odd-family",
            HintPreset::Double => "double",
            HintPreset::PalCenterNminus1 => "pal-n1",
            HintPreset::PalCenterN => "pal-n",
        }
    }

    /// The symmetry the preset was derived under, if any.
    pub fn symmetry(self) -> Option<Symmetry> {
        match self {
            HintPreset::EvenFamily | HintPreset::OddFamily => None,
            HintPreset::Double => Some(Symmetry::Double),
            HintPreset::PalCenterNminus1 => Some(Symmetry::PalCenterNminus1),
            HintPreset::PalCenterN => Some(Symmetry::PalCenterN),
        }
    }

    /// Forced values `f(i) = j` for a stack of `n` pancakes.
    pub fn hints(self, n: usize) -> Result<Vec<(i32, i32)>> {
        let odd = n % 2 == 1;
        let (wrong_parity, min) = match self {
            HintPreset::OddFamily => (!odd, 19),
            _ => (odd, 26),
        };
        if wrong_parity || n < min {
            return Err(Error::SearchPrecondition(format!(
                "preset {} does not apply to n = {n}",
                self.keyword()
            )));
        }
        let n = n as i32;
        let h = n / 2;
        let mut v = Vec::new();
        match self {
            HintPreset::EvenFamily => {
                v.extend([(2, 11), (-4, 21), (-6, 23), (-8, 2), (-10, 18)]);
                v.extend([(n - 5, n - 1), (n - 3, 6), (1 - n, 16)]);
                let mut i = 0;
                while n + i > 30 {
                    v.extend([(i - 12, 26 - i), (i - 14, 24 - i)]);
                    i -= 4;
                }
            }
            HintPreset::OddFamily => {
                v.extend([(-1, 8), (1 - n, 11), (n - 3, 6)]);
                if n % 4 == 3 {
                    v.extend([(n - 5, 4), (7 - n, n), (9 - n, 3), (11 - n, 13)]);
                    let mut i = 0;
                    while n + i > 15 {
                        v.extend([(13 - n - i, 16 - i), (15 - n - i, 14 - i)]);
                        i -= 4;
                    }
                } else {
                    v.extend([(3, n - 3), (5, n - 7), (-7, 12), (-9, 2)]);
                    v.extend([(h + 1, 5), (-h - 4, n), (5 - n, n - 4)]);
                    let mut i = 0;
                    while i + 24 < n {
                        v.extend([(h + i / 2 + 6, 14 + i), (h - i / 2, 16 + i)]);
                        i += 4;
                    }
                }
            }
            HintPreset::Double => {
                v.extend([(2, 8), (6, h), (h + 8, 4), (h + 1, h + 3), (h + 5, n - 1)]);
            }
            HintPreset::PalCenterNminus1 => {
                v.extend([(2, h - 2), (6, -2), (10, 3 - n)]);
                v.push((n - 3, if n != 34 { 8 } else { 10 }));
            }
            HintPreset::PalCenterN => {
                let r = h % 4;
                v.extend([(2, 7), (4, 11), (n - 7, -13), (r + 7, -3), (r + 9, 14)]);
            }
        }
        Ok(v)
    }
}

impl fmt::Display for HintPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for HintPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HintPreset::ALL
            .into_iter()
            .find(|p| p.keyword() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}
