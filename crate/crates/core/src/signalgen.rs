//! Deterministic synthesis of input signals, test channels, echo signals,
//! and SNR-calibrated measurement noise.
//!
//! Every generator is a pure function of its parameters and a 64-bit seed;
//! the same seed always reproduces the same buffer bit for bit. Channels come
//! in two flavors: a sparse impulse response with a handful of active taps
//! (the usual shape of a network echo path) and a fully dispersive one with
//! energy on every tap.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// A finite impulse response of length `L > 1`: the true channel a simulation
/// identifies, or any synthesized test channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ImpulseResponse {
    taps: Vec<f64>,
}

impl ImpulseResponse {
    /// Wraps a tap vector, rejecting lengths below 2 and non-finite taps.
    pub fn new(taps: Vec<f64>) -> Result<Self> {
        if taps.len() < 2 {
            return Err(Error::param(format!(
                "impulse response needs at least 2 taps, got {}",
                taps.len()
            )));
        }
        if let Some(bad) = taps.iter().find(|t| !t.is_finite()) {
            return Err(Error::param(format!(
                "impulse response contains non-finite tap {bad}"
            )));
        }
        Ok(Self { taps })
    }

    pub fn len(&self) -> usize {
        self.taps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taps.is_empty()
    }

    pub fn taps(&self) -> &[f64] {
        &self.taps
    }
}

fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` i.i.d. standard-normal samples, deterministic per seed.
pub fn white_noise(n: usize, seed: u64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::param("white_noise: sample count must be at least 1"));
    }
    let mut rng = rng_from(seed);
    Ok((0..n).map(|_| StandardNormal.sample(&mut rng)).collect())
}

/// A length-`len` channel with exactly `active` nonzero taps.
///
/// Tap positions are drawn uniformly without replacement and amplitudes are
/// standard-normal; every other tap is exactly zero.
pub fn sparse_impulse(len: usize, active: usize, seed: u64) -> Result<ImpulseResponse> {
    if len < 2 {
        return Err(Error::param(format!(
            "sparse_impulse: channel length must be at least 2, got {len}"
        )));
    }
    if active == 0 || active > len {
        return Err(Error::param(format!(
            "sparse_impulse: active tap count must be in 1..={len}, got {active}"
        )));
    }
    let mut rng = rng_from(seed);
    let mut positions = rand::seq::index::sample(&mut rng, len, active).into_vec();
    positions.sort_unstable();
    let mut taps = vec![0.0; len];
    for &pos in &positions {
        let mut amp: f64 = StandardNormal.sample(&mut rng);
        while amp == 0.0 {
            amp = StandardNormal.sample(&mut rng);
        }
        taps[pos] = amp;
    }
    ImpulseResponse::new(taps)
}

/// A length-`len` channel with all taps i.i.d. standard-normal.
pub fn dispersive_impulse(len: usize, seed: u64) -> Result<ImpulseResponse> {
    if len < 2 {
        return Err(Error::param(format!(
            "dispersive_impulse: channel length must be at least 2, got {len}"
        )));
    }
    let mut rng = rng_from(seed);
    let taps = (0..len).map(|_| StandardNormal.sample(&mut rng)).collect();
    ImpulseResponse::new(taps)
}

/// Convolves the input with the channel under zero prehistory:
/// `y(n) = sum_k h_k x(n-k)` with `x(m) = 0` for `m < 0`.
///
/// The output has the same length as the input.
pub fn synthesize_echo(x: &[f64], h: &ImpulseResponse) -> Result<Vec<f64>> {
    if x.is_empty() {
        return Err(Error::param("synthesize_echo: empty input signal"));
    }
    let taps = h.taps();
    let y = (0..x.len())
        .map(|n| {
            let reach = taps.len().min(n + 1);
            (0..reach).map(|k| taps[k] * x[n - k]).sum()
        })
        .collect();
    Ok(y)
}

/// Adds white Gaussian noise scaled so that `10 log10(P_y / P_v)` equals
/// `snr_db`, with `P_y` the empirical power of the given buffer.
///
/// `snr_db = f64::INFINITY` disables the noise and returns `y` unchanged.
pub fn add_noise_at_snr(y: &[f64], snr_db: f64, seed: u64) -> Result<Vec<f64>> {
    if y.is_empty() {
        return Err(Error::param("add_noise_at_snr: empty signal"));
    }
    let power: f64 = y.iter().map(|&s| s * s).sum::<f64>() / y.len() as f64;
    if power == 0.0 {
        return Err(Error::param(
            "add_noise_at_snr: signal has zero power, SNR undefined",
        ));
    }
    if snr_db == f64::INFINITY {
        return Ok(y.to_vec());
    }
    let noise_power = power / 10f64.powf(snr_db / 10.0);
    let scale = noise_power.sqrt();
    let noise = white_noise(y.len(), seed)?;
    Ok(y.iter().zip(&noise).map(|(&s, &g)| s + scale * g).collect())
}
