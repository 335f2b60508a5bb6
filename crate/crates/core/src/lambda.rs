//! SL(3,Z): integer matrices of determinant one, the elementary generators
//! and balls in the word metric they define.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Entries are kept as machine integers while they fit and promoted to
/// arbitrary precision otherwise; the representation is always the small one
/// when possible, so derived equality and hashing are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Entries {
    Small([[i64; 3]; 3]),
    Big(Box<[[BigInt; 3]; 3]>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaMatrix {
    entries: Entries,
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn normalize(big: [[BigInt; 3]; 3]) -> Entries {
    let mut small = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            match big[i][j].to_i64() {
                Some(v) => small[i][j] = v,
                None => return Entries::Big(Box::new(big)),
            }
        }
    }
    Entries::Small(small)
}

fn from_i128(m: [[i128; 3]; 3]) -> Entries {
    let mut small = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            match i64::try_from(m[i][j]) {
                Ok(v) => small[i][j] = v,
                Err(_) => return Entries::Big(Box::new(m.map(|r| r.map(BigInt::from)))),
            }
        }
    }
    Entries::Small(small)
}

/// 2x2 minors of i64 entries fit in i128; products of those do not always,
/// so callers only use this where one factor is an entry.
fn checked_mul_small(a: &[[i64; 3]; 3], b: &[[i64; 3]; 3]) -> Option<[[i128; 3]; 3]> {
    let mut out = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0i128;
            for k in 0..3 {
                acc = acc.checked_add(a[i][k] as i128 * b[k][j] as i128)?;
            }
            out[i][j] = acc;
        }
    }
    Some(out)
}

impl LambdaMatrix {
    pub fn new(entries: [[BigInt; 3]; 3]) -> Result<Self> {
        if det3(&entries).is_one() {
            Ok(Self {
                entries: normalize(entries),
            })
        } else {
            Err(Error::DeterminantNotOne)
        }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Result<Self> {
        Self::new(rows.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self {
            entries: Entries::Small([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        }
    }

    /// E_ij(s): the identity plus `s` in row `i`, column `j` (0-based, i != j).
    pub fn elementary(i: usize, j: usize, s: i64) -> Self {
        assert!(i < 3 && j < 3 && i != j, "elementary matrix needs i != j");
        let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        m[i][j] = s;
        Self {
            entries: Entries::Small(m),
        }
    }

    /// The twelve generators E_ij(+1), E_ij(-1), in a fixed order.
    pub fn generators() -> Vec<Self> {
        let mut out = Vec::with_capacity(12);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    out.push(Self::elementary(i, j, 1));
                    out.push(Self::elementary(i, j, -1));
                }
            }
        }
        out
    }

    pub fn entries(&self) -> [[BigInt; 3]; 3] {
        match &self.entries {
            Entries::Small(m) => m.map(|r| r.map(BigInt::from)),
            Entries::Big(m) => (**m).clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.entries, Entries::Small([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    }

    pub fn transpose(&self) -> Self {
        let entries = match &self.entries {
            Entries::Small(m) => Entries::Small(core::array::from_fn(|i| core::array::from_fn(|j| m[j][i]))),
            Entries::Big(m) => Entries::Big(Box::new(core::array::from_fn(|i| {
                core::array::from_fn(|j| m[j][i].clone())
            }))),
        };
        Self { entries }
    }

    /// Inverse via the adjugate; exact because the determinant is one.
    pub fn inverse(&self) -> Self {
        if let Entries::Small(m) = &self.entries {
            let m = m.map(|r| r.map(i128::from));
            let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            return Self {
                entries: from_i128([
                    [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
                    [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
                    [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
                ]),
            };
        }
        let m = self.entries();
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        let entries = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Self {
            entries: normalize(entries),
        }
    }

    /// Entries reduced into [0, p).
    pub fn reduce_mod(&self, p: u64) -> [[u64; 3]; 3] {
        match &self.entries {
            Entries::Small(m) => m.map(|r| r.map(|v| (v as i128).rem_euclid(p as i128) as u64)),
            Entries::Big(m) => {
                let modulus = BigInt::from(p);
                m.clone().map(|r| {
                    r.map(|v| v.mod_floor(&modulus).to_u64().expect("residue fits in u64"))
                })
            }
        }
    }

    /// Largest absolute entry; handy for reporting growth.
    pub fn max_abs_entry(&self) -> BigInt {
        self.entries()
            .iter()
            .flatten()
            .map(|e| e.abs())
            .max()
            .unwrap_or_default()
    }
}

impl Mul for &LambdaMatrix {
    type Output = LambdaMatrix;

    fn mul(self, rhs: &LambdaMatrix) -> LambdaMatrix {
        if let (Entries::Small(a), Entries::Small(b)) = (&self.entries, &rhs.entries) {
            if let Some(m) = checked_mul_small(a, b) {
                return LambdaMatrix { entries: from_i128(m) };
            }
        }
        let a = self.entries();
        let b = rhs.entries();
        LambdaMatrix {
            entries: normalize(core::array::from_fn(|i| {
                core::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j] + &a[i][2] * &b[2][j])
            })),
        }
    }
}

impl Mul for LambdaMatrix {
    type Output = LambdaMatrix;

    fn mul(self, rhs: LambdaMatrix) -> LambdaMatrix {
        &self * &rhs
    }
}

impl fmt::Display for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.entries();
        write!(
            f,
            "L[{},{},{};{},{},{};{},{},{}]",
            e[0][0], e[0][1], e[0][2], e[1][0], e[1][1], e[1][2], e[2][0], e[2][1], e[2][2]
        )
    }
}

/// All products of at most `radius` elementary generators, found by BFS.
pub fn lambda_ball(radius: usize) -> BTreeSet<LambdaMatrix> {
    lambda_spheres(radius).into_iter().flatten().collect()
}

/// The BFS layers of the ball: layer r holds the elements at word length exactly r.
pub fn lambda_spheres(radius: usize) -> Vec<Vec<LambdaMatrix>> {
    let gens = LambdaMatrix::generators();
    let mut seen = BTreeSet::new();
    seen.insert(LambdaMatrix::identity());
    let mut layers = alloc::vec![alloc::vec![LambdaMatrix::identity()]];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in layers.last().expect("at least one layer") {
            for s in &gens {
                let h = g * s;
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        layers.push(next);
    }
    layers
}
