//! Prime fields GF(p) and the GF(4) symbol substitution used for the Golay code.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Mat;

/// Exact scalar type the matrix and trellis code is generic over.
///
/// Elements are totally ordered by their canonical representative, so zero is
/// the least element; lexicographic comparisons of rows rely on this.
pub trait Scalar:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Serialize
    + DeserializeOwned
{
    /// Number of elements of the field.
    const ORDER: u32;

    /// Multiplicative inverse, `None` for zero.
    fn inv(self) -> Option<Self>;

    /// Reduces an integer literal into the field.
    fn from_i64(v: i64) -> Self;

    /// Canonical representative in `0..ORDER`.
    fn index(self) -> u32;

    /// Element with the given canonical representative. Panics if `i >= ORDER`.
    fn from_index(i: u32) -> Self;

    /// All field elements in increasing order.
    fn elements() -> impl Iterator<Item = Self> {
        (0..Self::ORDER).map(Self::from_index)
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

const fn inverse_table(p: u32) -> [u8; 256] {
    let mut table = [0u8; 256];
    let mut a = 1;
    while a < p {
        let mut b = 1;
        while b < p {
            if (a * b) % p == 1 {
                table[a as usize] = b as u8;
                break;
            }
            b += 1;
        }
        a += 1;
    }
    table
}

/// Element of GF(P) for a prime `P <= 251`, stored as its canonical representative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u8);

impl<const P: u32> Fp<P> {
    const VALID: () = assert!(P >= 2 && P <= 251 && is_prime(P as u64), "P must be a prime <= 251");
    const INV: [u8; 256] = inverse_table(P);

    pub fn new(v: u32) -> Self {
        let () = Self::VALID;
        Fp((v % P) as u8)
    }

    pub fn value(self) -> u32 {
        self.0 as u32
    }
}

impl<const P: u32> Scalar for Fp<P> {
    const ORDER: u32 = P;

    fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(Self::INV[self.0 as usize]))
        }
    }

    fn from_i64(v: i64) -> Self {
        let () = Self::VALID;
        Fp(v.rem_euclid(P as i64) as u8)
    }

    fn index(self) -> u32 {
        self.0 as u32
    }

    fn from_index(i: u32) -> Self {
        assert!(i < P, "index {i} out of range for GF({P})");
        Self::new(i)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u32 + rhs.0 as u32;
        Fp(if s >= P { s - P } else { s } as u8)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u32 + P - rhs.0 as u32;
        Fp(if s >= P { s - P } else { s } as u8)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u32 * rhs.0 as u32) % P) as u8)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp((P - self.0 as u32) as u8)
        }
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        let () = Self::VALID;
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        let () = Self::VALID;
        Fp(1)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Serialize for Fp<P> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.0 as u32)
    }
}

impl<'de, const P: u32> Deserialize<'de> for Fp<P> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Ok(Self::from_i64(v))
    }
}

/// Runtime description of GF(p), used where the modulus is only known at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    inv: Vec<u32>,
}

impl Field {
    /// Validates `p` and builds the inversion table.
    pub fn new(p: u64) -> Result<Field> {
        if !(2..=251).contains(&p) {
            return Err(Error::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        let p = p as u32;
        let mut inv = vec![0; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|b| a * b % p == 1).unwrap();
        }
        Ok(Field { p, inv })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Inverse of a nonzero canonical element.
    pub fn inv(&self, a: u32) -> Option<u32> {
        match a % self.p {
            0 => None,
            a => Some(self.inv[a as usize]),
        }
    }

    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

/// Replaces every GF(4) symbol by two bits (`0 -> 00`, `1 -> 11`, `a -> 01`,
/// `b -> 10`). With `swap` set, bit columns 4k+1 and 4k+3 (0-based) are
/// exchanged afterwards. Whitespace inside a row is ignored.
pub fn gf4_concatenate<S: AsRef<str>>(grid: &[S], swap: bool) -> Result<Mat<Fp<2>>> {
    let mut bits: Vec<Vec<Fp<2>>> = Vec::with_capacity(grid.len());
    for row in grid {
        let mut out = Vec::new();
        for ch in row.as_ref().chars().filter(|c| !c.is_whitespace()) {
            let (hi, lo) = match ch {
                '0' => (0, 0),
                '1' => (1, 1),
                'a' => (0, 1),
                'b' => (1, 0),
                other => return Err(Error::BadSymbol(other)),
            };
            out.push(Fp::new(hi));
            out.push(Fp::new(lo));
        }
        if swap {
            let mut k = 0;
            while 4 * k + 3 < out.len() {
                out.swap(4 * k + 1, 4 * k + 3);
                k += 1;
            }
        }
        bits.push(out);
    }
    let cols = bits.first().map_or(0, Vec::len);
    if bits.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch("GF(4) rows differ in length".into()));
    }
    Mat::from_rows(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    type F3 = Fp<3>;

    #[test]
    fn field_new_validates() {
        let f = Field::new(3).unwrap();
        assert_eq!(f.inv(2), Some(2));
        assert_eq!(Field::new(2).unwrap().inv(1), Some(1));
        assert_eq!(Field::new(4), Err(Error::CompositeModulus(4)));
        assert_eq!(Field::new(1), Err(Error::OutOfRange(1)));
        assert_eq!(Field::new(257), Err(Error::OutOfRange(257)));
        assert_eq!(Field::new(251).unwrap().p(), 251);
    }

    #[test]
    fn runtime_and_const_inverses_agree() {
        let f = Field::new(13).unwrap();
        for a in 1..13u32 {
            assert_eq!(f.inv(a), Fp::<13>::new(a).inv().map(|x| x.value()));
        }
    }

    fn check_axioms<F: Scalar>() {
        let els: Vec<F> = F::elements().collect();
        assert_eq!(els.len() as u32, F::ORDER);
        for &a in &els {
            assert_eq!(a + F::zero(), a);
            assert_eq!(a * F::one(), a);
            assert_eq!(a + (-a), F::zero());
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F::one());
            }
            for &b in &els {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!(a - b, a + (-b));
                for &c in &els {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn field_axioms_small_primes() {
        check_axioms::<Fp<2>>();
        check_axioms::<Fp<3>>();
        check_axioms::<Fp<5>>();
        check_axioms::<Fp<7>>();
        check_axioms::<Fp<11>>();
        check_axioms::<Fp<13>>();
    }

    #[test]
    fn negative_literals_reduce() {
        assert_eq!(F3::from_i64(-1), F3::new(2));
        assert_eq!(F3::from_i64(-6), F3::zero());
        assert_eq!(Fp::<251>::from_i64(-1).value(), 250);
    }

    fn bits(m: &Mat<Fp<2>>) -> String {
        m.row(0).iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn gf4_pairs_with_swap() {
        let cases = [
            ("ab", "0011"),
            ("b1", "1110"),
            ("1a", "1101"),
            ("ba", "1100"),
            ("1b", "1011"),
            ("a1", "0111"),
        ];
        for (sym, want) in cases {
            assert_eq!(bits(&gf4_concatenate(&[sym], true).unwrap()), want, "{sym}");
        }
        assert_eq!(bits(&gf4_concatenate(&["ab"], false).unwrap()), "0110");
        assert_eq!(bits(&gf4_concatenate(&["000"], false).unwrap()), "000000");
        assert_eq!(gf4_concatenate(&["0c"], true), Err(Error::BadSymbol('c')));
    }

    #[test]
    fn gf4_injective_on_small_grids() {
        let syms = ['0', '1', 'a', 'b'];
        let mut seen = std::collections::HashSet::new();
        for i in 0..64 {
            let s: String = (0..3).map(|k| syms[(i >> (2 * k)) & 3]).collect();
            for swap in [false, true] {
                let m = gf4_concatenate(&[s.as_str()], swap).unwrap();
                assert!(seen.insert((swap, bits(&m))));
            }
        }
    }
}
