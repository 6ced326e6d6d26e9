//! Exact scalar arithmetic for the three supported fields.
//!
//! Every scalar carries enough information to know which field it lives in,
//! so mixed-field arithmetic is detected instead of silently producing
//! garbage. All arithmetic is exact; there is no floating point anywhere.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which scalar field a value lives over, together with the involution the
/// ambient matrix ring will use: identity for `Q` and `Fp`, complex
/// conjugation for `Qi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// Rational numbers.
    Q,
    /// Gaussian rationals, involution = complex conjugation.
    Qi,
    /// Prime field of the given order, p < 2^16.
    Fp(u64),
}

impl FieldSpec {
    pub fn fp(p: u64) -> Result<FieldSpec> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Fp(p))
    }

    /// True when the scalar involution is complex conjugation rather than
    /// the identity.
    pub fn conjugating(&self) -> bool {
        matches!(self, FieldSpec::Qi)
    }

    /// Parse "Q", "Qi" or "Fp:<p>".
    pub fn parse(s: &str) -> Result<FieldSpec> {
        match s {
            "Q" => Ok(FieldSpec::Q),
            "Qi" => Ok(FieldSpec::Qi),
            _ => {
                if let Some(p) = s.strip_prefix("Fp:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad prime: {p}")))?;
                    FieldSpec::fp(p)
                } else {
                    Err(Error::InvalidArgument(format!("unknown field: {s}")))
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Qi => write!(f, "Qi"),
            FieldSpec::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
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

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (the `BigRational` normal form); prime-field
/// residues are kept reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Qi { re: BigRational, im: BigRational },
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Qi { .. } => FieldSpec::Qi,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn zero(field: FieldSpec) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Scalar {
        match field {
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(v.into())),
            FieldSpec::Qi => Scalar::Qi {
                re: BigRational::from_integer(v.into()),
                im: BigRational::zero(),
            },
            FieldSpec::Fp(p) => Scalar::Fp {
                val: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match field {
            FieldSpec::Q => Scalar::Q(BigRational::new(num.into(), den.into())),
            FieldSpec::Qi => Scalar::Qi {
                re: BigRational::new(num.into(), den.into()),
                im: BigRational::zero(),
            },
            FieldSpec::Fp { .. } => {
                let n = Scalar::from_i64(field, num);
                let d = Scalar::from_i64(field, den);
                n.div(&d).expect("nonzero denominator in Fp")
            }
        }
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
        Scalar::Qi { re, im }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Qi { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field())
    }

    fn check_field(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Qi { re: ar, im: ai }, Scalar::Qi { re: br, im: bi }) => Scalar::Qi {
                re: ar + br,
                im: ai + bi,
            },
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Qi { re: ar, im: ai }, Scalar::Qi { re: br, im: bi }) => Scalar::Qi {
                re: ar * br - ai * bi,
                im: ar * bi + ai * br,
            },
            // p < 2^16 so the product fits in u64 without overflow
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: (a * b) % p,
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Qi { re, im } => Scalar::Qi { re: -re, im: -im },
            Scalar::Fp { val, p } => Scalar::Fp {
                val: (p - val) % p,
                p: *p,
            },
        }
    }

    /// The scalar involution: identity on Q and Fp, conjugation on Qi.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Qi { re, im } => Scalar::Qi {
                re: re.clone(),
                im: -im,
            },
            other => other.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Qi { re, im } => {
                let norm = re * re + im * im;
                Scalar::Qi {
                    re: re / &norm,
                    im: -im / &norm,
                }
            }
            Scalar::Fp { val, p } => Scalar::Fp {
                val: fp_inv(*val, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inv()?)
    }

    /// Parse one scalar token of the matrix file format.
    pub fn parse(field: FieldSpec, token: &str) -> Result<Scalar> {
        let token = token.replace('\u{2212}', "-");
        let err = |msg: String| Error::Parse { line: 0, msg };
        match field {
            FieldSpec::Q => parse_rational(&token)
                .map(Scalar::Q)
                .ok_or_else(|| err(format!("bad rational: {token}"))),
            FieldSpec::Qi => {
                parse_gaussian(&token).ok_or_else(|| err(format!("bad Gaussian rational: {token}")))
            }
            FieldSpec::Fp(p) => {
                let v: i64 = token
                    .parse()
                    .map_err(|_| err(format!("bad residue: {token}")))?;
                Ok(Scalar::Fp {
                    val: v.rem_euclid(p as i64) as u64,
                    p,
                })
            }
        }
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime, a != 0
    let (mut r0, mut r1) = (a as i64, p as i64);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i64) as u64
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Parse tokens like "1/2+3/4i", "2i", "-i", "3", "i", "-1/2-3i".
fn parse_gaussian(s: &str) -> Option<Scalar> {
    let imag_coeff = |t: &str| -> Option<BigRational> {
        match t {
            "" | "+" => Some(BigRational::one()),
            "-" => Some(-BigRational::one()),
            _ => parse_rational(t),
        }
    };
    if let Some(body) = s.strip_suffix('i') {
        // last '+'/'-' past position 0 splits real and imaginary parts
        if let Some(idx) = body.rfind(['+', '-']).filter(|&i| i > 0) {
            let re = parse_rational(&body[..idx])?;
            let im = imag_coeff(&body[idx..])?;
            Some(Scalar::Qi { re, im })
        } else {
            Some(Scalar::Qi {
                re: BigRational::zero(),
                im: imag_coeff(body)?,
            })
        }
    } else {
        Some(Scalar::Qi {
            re: parse_rational(s)?,
            im: BigRational::zero(),
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Qi { re, im } => {
                if im.is_zero() {
                    write!(f, "{re}")
                } else if re.is_zero() {
                    write!(f, "{}i", imag_str(im))
                } else if im.is_positive() {
                    write!(f, "{re}+{}i", imag_str(im))
                } else {
                    write!(f, "{re}{}i", imag_str(im))
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

fn imag_str(im: &BigRational) -> String {
    if im.is_one() {
        String::new()
    } else if (-im).is_one() {
        "-".to_string()
    } else {
        im.to_string()
    }
}
