//! Reduced words in the iterated amalgams G_{N+1} = G_N *_{K_N} (K_N × Z).
//!
//! A word of level L >= 1 is stored as x_0 t^{m_1} x_1 ... t^{m_r} x_r with
//! t = g_L, r >= 1, every m_i != 0 and every x_i of level < L. Each x_i with
//! i < r is the canonical representative of its coset x_i K_{L-1} (see
//! [`GroupWord::split`]); the trailing x_r is arbitrary. Under this shape two
//! words are equal as group elements exactly when they are structurally equal,
//! so `==`, `Hash` and `Ord` all respect the group.
//!
//! The coset representatives come for free from the construction: in G_0 the
//! coset (k, λ) K_N is determined by λ and the part of k supported below N,
//! and at higher levels only the trailing syllable sees the right factor.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::g0::G0Element;
use crate::kvec::{HnVector, KVector};
use crate::lambda::LambdaMatrix;

/// Raw input to [`reduce`]: a G_0 element or a power of a stable letter g_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Syllable {
    Base(G0Element),
    Stable { level: usize, exponent: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Amalgam {
    level: usize,
    syllables: Vec<(GroupWord, BigInt)>,
    tail: Box<GroupWord>,
}

impl Amalgam {
    pub fn level(&self) -> usize {
        self.level
    }

    /// Pairs (x_i, m_{i+1}) for i < r.
    pub fn syllables(&self) -> &[(GroupWord, BigInt)] {
        &self.syllables
    }

    pub fn tail(&self) -> &GroupWord {
        &self.tail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupWord {
    Base(G0Element),
    Amalgam(Amalgam),
}

/// The subgroups membership can be decided for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subgroup {
    K,
    /// K_N = ⊕_{n >= N} H_n
    KTail(usize),
    Lambda,
    /// G_N
    Level(usize),
}

impl Default for GroupWord {
    fn default() -> Self {
        Self::identity()
    }
}

impl From<G0Element> for GroupWord {
    fn from(g: G0Element) -> Self {
        GroupWord::Base(g)
    }
}

impl From<HnVector> for GroupWord {
    fn from(x: HnVector) -> Self {
        GroupWord::Base(G0Element::from_k(KVector::from_hn(x)))
    }
}

impl From<KVector> for GroupWord {
    fn from(k: KVector) -> Self {
        GroupWord::Base(G0Element::from_k(k))
    }
}

impl From<LambdaMatrix> for GroupWord {
    fn from(l: LambdaMatrix) -> Self {
        GroupWord::Base(G0Element::from_lambda(l))
    }
}

enum Item<'a> {
    Elem(&'a GroupWord),
    Owned(GroupWord),
    Stable(BigInt),
}

/// Left-to-right accumulator for products at a fixed level.
struct Builder {
    level: usize,
    closed: Vec<(GroupWord, BigInt)>,
    open: GroupWord,
}

impl Builder {
    fn new(level: usize) -> Self {
        Self {
            level,
            closed: Vec::new(),
            open: GroupWord::identity(),
        }
    }

    fn starting_with(word: &GroupWord, level: usize) -> Self {
        match word {
            GroupWord::Amalgam(a) if a.level == level => Self {
                level,
                closed: a.syllables.clone(),
                open: (*a.tail).clone(),
            },
            _ => Self {
                level,
                closed: Vec::new(),
                open: word.clone(),
            },
        }
    }

    fn push_elem(&mut self, y: &GroupWord) {
        if self.open.is_identity() {
            self.open = y.clone();
        } else if !y.is_identity() {
            self.open = self.open.mul(y);
        }
    }

    fn push_stable(&mut self, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let (rep, k) = core::mem::take(&mut self.open).split(self.level - 1);
        let k = GroupWord::from(k);
        if rep.is_identity() && !self.closed.is_empty() {
            // open syllable lies in K_{level-1}: it commutes with t, so merge powers
            let last = self.closed.last_mut().expect("nonempty");
            last.1 += m;
            if last.1.is_zero() {
                let (x, _) = self.closed.pop().expect("nonempty");
                self.open = x.mul(&k);
            } else {
                self.open = k;
            }
        } else {
            self.closed.push((rep, m));
            self.open = k;
        }
    }

    fn push(&mut self, item: Item<'_>) {
        match item {
            Item::Elem(y) => self.push_elem(y),
            Item::Owned(y) => self.push_elem(&y),
            Item::Stable(m) => self.push_stable(m),
        }
    }

    fn finish(self) -> GroupWord {
        if self.closed.is_empty() {
            self.open
        } else {
            GroupWord::Amalgam(Amalgam {
                level: self.level,
                syllables: self.closed,
                tail: Box::new(self.open),
            })
        }
    }
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::Base(G0Element::identity())
    }

    /// g_level^exponent.
    pub fn stable(level: usize, exponent: impl Into<BigInt>) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let exponent = exponent.into();
        if exponent.is_zero() {
            return Ok(Self::identity());
        }
        Ok(GroupWord::Amalgam(Amalgam {
            level,
            syllables: alloc::vec![(Self::identity(), exponent)],
            tail: Box::new(Self::identity()),
        }))
    }

    /// Minimal N with the element in G_N.
    pub fn level(&self) -> usize {
        match self {
            GroupWord::Base(_) => 0,
            GroupWord::Amalgam(a) => a.level,
        }
    }

    /// Number of stable syllables at the top level (0 for G_0 elements).
    pub fn stable_count(&self) -> usize {
        match self {
            GroupWord::Base(_) => 0,
            GroupWord::Amalgam(a) => a.syllables.len(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, GroupWord::Base(g) if g.is_identity())
    }

    pub fn as_base(&self) -> Option<&G0Element> {
        match self {
            GroupWord::Base(g) => Some(g),
            GroupWord::Amalgam(_) => None,
        }
    }

    pub fn as_amalgam(&self) -> Option<&Amalgam> {
        match self {
            GroupWord::Base(_) => None,
            GroupWord::Amalgam(a) => Some(a),
        }
    }

    /// The element as syllables at `level`, which must be at least its own level.
    fn items(&self, level: usize) -> Vec<Item<'_>> {
        match self {
            GroupWord::Amalgam(a) if a.level == level => {
                let mut out = Vec::with_capacity(2 * a.syllables.len() + 1);
                for (x, m) in &a.syllables {
                    out.push(Item::Elem(x));
                    out.push(Item::Stable(m.clone()));
                }
                out.push(Item::Elem(&a.tail));
                out
            }
            _ => alloc::vec![Item::Elem(self)],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let level = self.level().max(other.level());
        if level == 0 {
            let (GroupWord::Base(a), GroupWord::Base(b)) = (self, other) else {
                unreachable!("level 0 words are G_0 elements")
            };
            return GroupWord::Base(a.mul(b));
        }
        let mut builder = Builder::starting_with(self, level);
        for item in other.items(level) {
            builder.push(item);
        }
        builder.finish()
    }

    pub fn inv(&self) -> Self {
        match self {
            GroupWord::Base(g) => GroupWord::Base(g.inv()),
            GroupWord::Amalgam(a) => {
                let mut builder = Builder::new(a.level);
                builder.push(Item::Owned(a.tail.inv()));
                for (x, m) in a.syllables.iter().rev() {
                    builder.push(Item::Stable(-m));
                    builder.push(Item::Owned(x.inv()));
                }
                builder.finish()
            }
        }
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, exponent: i64) -> Self {
        let mut base = if exponent < 0 { self.inv() } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Writes the element as c·k with k in K_N and c a canonical representative
    /// of the coset of K_N containing the element.
    pub fn split(self, n: usize) -> (GroupWord, KVector) {
        match self {
            GroupWord::Base(g) => {
                let (low, high) = g.k.split_at(n);
                let k = high.act(&g.lambda.inverse());
                (GroupWord::Base(G0Element { k: low, lambda: g.lambda }), k)
            }
            GroupWord::Amalgam(mut a) => {
                let tail = core::mem::take(&mut *a.tail);
                let (rep, k) = tail.split(n);
                *a.tail = rep;
                (GroupWord::Amalgam(a), k)
            }
        }
    }

    pub fn is_member(&self, sub: Subgroup) -> bool {
        match (sub, self) {
            (Subgroup::Level(n), w) => w.level() <= n,
            (_, GroupWord::Amalgam(_)) => false,
            (Subgroup::K, GroupWord::Base(g)) => g.lambda.is_identity(),
            (Subgroup::KTail(n), GroupWord::Base(g)) => g.lambda.is_identity() && g.k.in_tail(n),
            (Subgroup::Lambda, GroupWord::Base(g)) => g.k.is_zero(),
        }
    }

    /// The matrix M with g x g^{-1} = M·x for every x in H_index, when
    /// conjugation by this element keeps H_index inside K. That happens exactly
    /// when every stable letter g_L met while peeling the word commutes with
    /// H_index, i.e. index >= L - 1.
    pub fn conjugation_on_summand(&self, index: usize, prime: u64) -> Option<[[u64; 3]; 3]> {
        match self {
            GroupWord::Base(g) => Some(g.lambda.reduce_mod(prime)),
            GroupWord::Amalgam(a) => {
                if index + 1 < a.level {
                    return None;
                }
                let mut acc = a.tail.conjugation_on_summand(index, prime)?;
                for (x, _) in a.syllables.iter().rev() {
                    let m = x.conjugation_on_summand(index, prime)?;
                    acc = mat_mul_mod(&m, &acc, prime);
                }
                Some(acc)
            }
        }
    }

    /// h g h^{-1}
    pub fn conj_by(&self, h: &Self) -> Self {
        h.mul(self).mul(&h.inv())
    }
}

fn mat_mul_mod(a: &[[u64; 3]; 3], b: &[[u64; 3]; 3], p: u64) -> [[u64; 3]; 3] {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            ((0..3).map(|k| a[i][k] as u128 * b[k][j] as u128).sum::<u128>() % p as u128) as u64
        })
    })
}

/// Reduces a raw product of syllables to its reduced word.
pub fn reduce(syllables: &[Syllable]) -> Result<GroupWord> {
    let mut acc = GroupWord::identity();
    for s in syllables {
        let w = match s {
            Syllable::Base(g) => GroupWord::Base(g.clone()),
            Syllable::Stable { level, exponent } => GroupWord::stable(*level, exponent.clone())?,
        };
        acc = acc.mul(&w);
    }
    Ok(acc)
}

pub fn mul(a: &GroupWord, b: &GroupWord) -> GroupWord {
    a.mul(b)
}

pub fn inv(a: &GroupWord) -> GroupWord {
    a.inv()
}

/// Group equality decided by reducing a·b^{-1} to the identity.
pub fn eq(a: &GroupWord, b: &GroupWord) -> bool {
    a.mul(&b.inv()).is_identity()
}

pub fn membership(a: &GroupWord, sub: Subgroup) -> bool {
    a.is_member(sub)
}

/// h g h^{-1}
pub fn conj(g: &GroupWord, h: &GroupWord) -> GroupWord {
    g.conj_by(h)
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupWord::Base(g) => write!(f, "{g}"),
            GroupWord::Amalgam(a) => {
                let mut first = true;
                let mut sep = |f: &mut fmt::Formatter<'_>| {
                    if first {
                        first = false;
                        Ok(())
                    } else {
                        f.write_str(" * ")
                    }
                };
                for (x, m) in &a.syllables {
                    if !x.is_identity() {
                        sep(f)?;
                        write!(f, "{x}")?;
                    }
                    sep(f)?;
                    if m.is_one() {
                        write!(f, "t({})", a.level)?;
                    } else {
                        write!(f, "t({})^{}", a.level, m)?;
                    }
                }
                if !a.tail.is_identity() {
                    sep(f)?;
                    write!(f, "{}", a.tail)?;
                }
                Ok(())
            }
        }
    }
}
