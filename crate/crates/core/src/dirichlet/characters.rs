//! Dirichlet characters modulo `q ≤ 100`.
//!
//! The unit group `(Z/qZ)^×` is split into prime-power components. Odd
//! components are cyclic with a primitive root found by brute force; the
//! component `2^e` is generated by `−1` (order 2, for `e ≥ 2`) and `5`
//! (order `2^{e−2}`, for `e ≥ 3`). Generators are lifted to `Z/qZ` by CRT
//! and every unit gets its exponent vector from a full enumeration.
//!
//! A character is fixed by one exponent `m_j ∈ [0, o_j)` per generator and
//! stored as exact roots of unity `χ(n) = e^{2πi k(n)/L}`, `L = lcm(o_j)`.

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};
use crate::special_fns::elementary::cis_pi;

pub const MAX_MODULUS: u64 = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirichletCharacter {
    modulus: u64,
    /// `L` in `χ(n) = e^{2πi k/L}`.
    order: u64,
    /// `k(n)` for units, `None` off the unit group.
    log_table: Vec<Option<u64>>,
    values: Vec<Complex64>,
    /// Exponents `m_j` on the generators, the sort key.
    label: Vec<u64>,
    primitive: bool,
}

fn root_of_unity(k: u64, order: u64) -> Complex64 {
    cis_pi(Complex64::new(2.0 * (k % order) as f64 / order as f64, 0.0))
}

fn factorize(mut q: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut e = 0;
            while q % p == 0 {
                q /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if q > 1 {
        out.push((q, 1));
    }
    out
}

fn multiplicative_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut k = 1;
    while x != 1 {
        x = x * g % m;
        k += 1;
    }
    k
}

/// Generators of `(Z/p^e Z)^×` with their orders.
fn local_generators(p: u64, e: u32) -> Vec<(u64, u64)> {
    let pe = p.pow(e);
    if p == 2 {
        match e {
            1 => vec![],
            2 => vec![(3, 2)],
            _ => vec![(pe - 1, 2), (5, pe / 4)],
        }
    } else {
        let phi = pe / p * (p - 1);
        let g = (2..pe)
            .find(|&g| g % p != 0 && multiplicative_order(g, pe) == phi)
            .expect("odd prime powers have primitive roots");
        vec![(g, phi)]
    }
}

/// `x` with `x ≡ r (mod m)` and `x ≡ 1 (mod q/m)`.
fn crt_lift(r: u64, m: u64, q: u64) -> u64 {
    let rest = q / m;
    (0..q)
        .find(|&x| x % m == r % m && x % rest == 1 % rest)
        .expect("coprime moduli")
}

struct UnitGroup {
    modulus: u64,
    orders: Vec<u64>,
    /// Exponent vector of each residue, `None` for non-units.
    logs: Vec<Option<Vec<u64>>>,
}

fn unit_group(q: u64) -> UnitGroup {
    let mut gens = Vec::new();
    for (p, e) in factorize(q) {
        let pe = p.pow(e);
        for (g, o) in local_generators(p, e) {
            gens.push((crt_lift(g, pe, q), o));
        }
    }
    let orders: Vec<u64> = gens.iter().map(|&(_, o)| o).collect();
    let mut logs: Vec<Option<Vec<u64>>> = vec![None; q as usize];
    let mut exps = vec![0u64; gens.len()];
    loop {
        let value = gens
            .iter()
            .zip(&exps)
            .fold(1 % q, |acc, (&(g, _), &k)| acc * mod_pow(g, k, q) % q);
        logs[value as usize] = Some(exps.clone());
        if !advance(&mut exps, &orders) {
            break;
        }
    }
    UnitGroup {
        modulus: q,
        orders,
        logs,
    }
}

fn mod_pow(mut b: u64, mut k: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        k >>= 1;
    }
    r
}

/// Odometer step, last index fastest; false after the final tuple.
fn advance(digits: &mut [u64], bases: &[u64]) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < bases[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}

impl DirichletCharacter {
    fn build(group: &UnitGroup, label: Vec<u64>) -> Self {
        let q = group.modulus;
        let order = group.orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
        let log_table: Vec<Option<u64>> = group
            .logs
            .iter()
            .map(|log| {
                log.as_ref().map(|ks| {
                    ks.iter()
                        .zip(&label)
                        .zip(&group.orders)
                        .map(|((&k, &m), &o)| k * m * (order / o))
                        .sum::<u64>()
                        % order
                })
            })
            .collect();
        let values = log_table
            .iter()
            .map(|k| match k {
                Some(k) => root_of_unity(*k, order),
                None => Complex64::new(0.0, 0.0),
            })
            .collect();
        let mut chi = DirichletCharacter {
            modulus: q,
            order,
            log_table,
            values,
            label,
            primitive: false,
        };
        chi.primitive = chi.compute_primitive();
        chi
    }

    /// Trivial on every unit `≡ 1 (mod d)` for some proper divisor `d`?
    fn compute_primitive(&self) -> bool {
        let q = self.modulus;
        if q == 1 {
            return true;
        }
        for d in (1..q).filter(|d| q % d == 0) {
            let induced = (1..q)
                .filter(|&n| n % d == 1 % d && n.gcd(&q) == 1)
                .all(|n| self.log_table[n as usize] == Some(0));
            if induced {
                return false;
            }
        }
        true
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `χ(n)` for any integer `n`.
    pub fn value(&self, n: i64) -> Complex64 {
        let q = self.modulus as i64;
        self.values[n.rem_euclid(q) as usize]
    }

    /// The table `χ(0), …, χ(q−1)`.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `χ(n) = e^{2πi k/L}` as `(k, L)`, or `None` off the units.
    pub fn exact_value(&self, n: i64) -> Option<(u64, u64)> {
        let q = self.modulus as i64;
        self.log_table[n.rem_euclid(q) as usize].map(|k| (k, self.order))
    }

    /// `χ(−1) = ±1`.
    pub fn parity(&self) -> i32 {
        match self.exact_value(-1) {
            Some((0, _)) => 1,
            _ => -1,
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    pub fn is_principal(&self) -> bool {
        self.label.iter().all(|&m| m == 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// Exponents on the unit-group generators.
    pub fn label(&self) -> &[u64] {
        &self.label
    }

    /// The complex-conjugate character.
    pub fn conj(&self) -> DirichletCharacter {
        let order = self.order;
        let log_table: Vec<Option<u64>> = self
            .log_table
            .iter()
            .map(|k| k.map(|k| (order - k) % order))
            .collect();
        let values = self.values.iter().map(|v| v.conj()).collect();
        DirichletCharacter {
            modulus: self.modulus,
            order,
            log_table,
            values,
            label: self.label.clone(),
            primitive: self.primitive,
        }
    }

    /// Whether all values are real (`±1` or 0).
    pub fn is_real(&self) -> bool {
        self.log_table
            .iter()
            .all(|k| k.map_or(true, |k| (2 * k) % self.order == 0))
    }
}

/// All `φ(q)` characters mod `q`, principal first, then in lexicographic
/// order of the generator exponents.
pub fn characters_mod(q: u64) -> Result<Vec<DirichletCharacter>> {
    if q == 0 || q > MAX_MODULUS {
        return Err(ZetaError::UnsupportedModulus(q));
    }
    let group = unit_group(q);
    let mut label = vec![0u64; group.orders.len()];
    let mut out = Vec::new();
    loop {
        out.push(DirichletCharacter::build(&group, label.clone()));
        if !advance(&mut label, &group.orders) {
            break;
        }
    }
    Ok(out)
}

fn unique_real_odd(q: u64) -> DirichletCharacter {
    characters_mod(q)
        .expect("small modulus")
        .into_iter()
        .find(|c| !c.is_even() && c.is_real())
        .expect("odd real character exists")
}

/// The non-principal character mod 3.
pub fn chi_minus3() -> DirichletCharacter {
    unique_real_odd(3)
}

/// The non-principal character mod 4.
pub fn chi_minus4() -> DirichletCharacter {
    unique_real_odd(4)
}

/// The non-principal character mod 6.
pub fn chi_minus6() -> DirichletCharacter {
    unique_real_odd(6)
}

/// `G(χ) = Σ_{r=1}^{q} χ(r) e^{2πir/q}`.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    (1..=q)
        .map(|r| chi.value(r as i64) * root_of_unity(r, q))
        .sum()
}
