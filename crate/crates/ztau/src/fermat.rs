//! Bounded exhaustive search for nontrivial solutions of x^k + y^k = z^k
//! over ℤ[τ], with coefficients of x and y ranging over [−bound, bound]².
//!
//! For every nonzero pair the sum s = x^k + y^k is tested for being an
//! exact k-th power. The hot path runs in checked 128-bit integers with a
//! norm filter in front (norm(s) must itself be a perfect k-th integer
//! power) and falls back to arbitrary precision on any overflow, so no
//! pair is ever decided by wraparound or by a float.
//!
//! Symmetries of the equation (x ↔ y, and sign flips by parity of k) are
//! pruned during iteration and re-expanded in the report, so the reported
//! set is the same as a full ordered scan of the box. Work is sharded by
//! the position of x in the scan list; shard results merge in shard order,
//! which makes the output independent of the worker count.

use crate::error::Error;
use crate::ring::RingElement;
use crate::triples::PowerTriple;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::mpsc;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Exponent k ≥ 2.
    pub k: u32,
    /// Coefficient box radius for x and y (each coordinate in [−bound, bound]).
    pub bound: u32,
    /// Worker thread count; output does not depend on it.
    pub workers: usize,
    /// Canonicalize solutions and drop duplicates when set; otherwise the
    /// report lists every ordered (x, y) hit of the full box.
    pub dedup: bool,
}

impl SearchConfig {
    pub fn new(k: u32, bound: u32) -> Self {
        SearchConfig {
            k,
            bound,
            workers: 1,
            dedup: true,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub solutions: Vec<PowerTriple>,
    /// Ordered nonzero (x, y) pairs covered by the scan (after symmetry
    /// re-expansion): ((2·bound+1)² − 1)².
    pub pairs_tested: u64,
    pub elapsed: Duration,
}

/// Re-verify every reported solution exactly; true iff all pass and are
/// nontrivial.
pub fn verify_report(report: &SearchReport) -> bool {
    report
        .solutions
        .iter()
        .all(|t| t.k == report.config.k && t.is_nontrivial() && t.verify())
}

/// Run the search, discarding progress callbacks.
pub fn search(cfg: &SearchConfig) -> SearchReport {
    search_streaming(cfg, |_| {})
}

/// Run the search, invoking `sink` for every raw scan hit in a fixed
/// deterministic order (shard by shard).
pub fn search_streaming(cfg: &SearchConfig, sink: impl FnMut(&PowerTriple)) -> SearchReport {
    run(cfg, None, sink).expect("search without checkpointing cannot fail on i/o")
}

/// Run the search with a resumable checkpoint file: one JSON line per
/// completed shard. An existing file is validated against the config and
/// its shards are not re-scanned.
pub fn search_resumable(
    cfg: &SearchConfig,
    checkpoint: &Path,
    sink: impl FnMut(&PowerTriple),
) -> Result<SearchReport, Error> {
    run(cfg, Some(checkpoint), sink)
}

/// A raw scan hit: x^k + y^k = w^k with (x, y) the scan's pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RawHit {
    x: RingElement,
    y: RingElement,
    w: RingElement,
}

fn lex_key(e: &RingElement) -> (BigInt, BigInt) {
    (e.m().clone(), e.n().clone())
}

fn triple_key(t: &PowerTriple) -> ((BigInt, BigInt), (BigInt, BigInt), (BigInt, BigInt)) {
    (lex_key(&t.x), lex_key(&t.y), lex_key(&t.z))
}

/// Lexicographically positive: first nonzero coefficient positive.
fn lex_positive(m: i64, n: i64) -> bool {
    m > 0 || (m == 0 && n > 0)
}

fn run(
    cfg: &SearchConfig,
    checkpoint: Option<&Path>,
    mut sink: impl FnMut(&PowerTriple),
) -> Result<SearchReport, Error> {
    assert!(cfg.k >= 2, "SearchConfig requires k >= 2");
    let started = Instant::now();
    let b = cfg.bound as i64;
    let even = cfg.k.is_multiple_of(2);

    // Scan elements in coefficient-lex order. Even k also identifies
    // x ~ −x, so only the lex-positive half is scanned.
    let mut scan: Vec<(i64, i64)> = Vec::new();
    for m in -b..=b {
        for n in -b..=b {
            if (m, n) == (0, 0) {
                continue;
            }
            if even && !lex_positive(m, n) {
                continue;
            }
            scan.push((m, n));
        }
    }
    let shard_count = scan.len();

    let mut completed: BTreeMap<usize, Vec<RawHit>> = BTreeMap::new();
    if let Some(path) = checkpoint {
        if path.exists() {
            completed = load_checkpoint(path, cfg, shard_count)?;
        } else {
            write_checkpoint_header(path, cfg, shard_count)?;
        }
    }

    let pending: Vec<usize> = (0..shard_count)
        .filter(|i| !completed.contains_key(i))
        .collect();
    let powers = precompute_powers(&scan, cfg.k);
    let residues = kth_power_residues(cfg.k);

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Vec<RawHit>)>();
    let workers = cfg.workers.max(1).min(pending.len().max(1));

    // Hits stream to the sink as soon as every earlier shard is done, so
    // the emission order never depends on worker scheduling.
    let mut next_emit: usize = 0;
    let mut raw: Vec<RawHit> = Vec::new();
    drain_ready(&completed, &mut next_emit, &mut raw, cfg.k, &mut sink);

    std::thread::scope(|scope| -> Result<(), Error> {
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            let pending = &pending;
            let scan = &scan;
            let powers = &powers;
            let residues = &residues;
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, AtomicOrdering::Relaxed);
                let Some(&shard) = pending.get(idx) else {
                    break;
                };
                let hits = scan_shard(shard, scan, powers, cfg.k, even, residues);
                if tx.send((shard, hits)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        for (shard, hits) in rx {
            if let Some(path) = checkpoint {
                append_checkpoint_line(path, shard, &hits)?;
            }
            completed.insert(shard, hits);
            drain_ready(&completed, &mut next_emit, &mut raw, cfg.k, &mut sink);
        }
        Ok(())
    })?;

    debug_assert_eq!(next_emit, shard_count);

    let mut solutions: Vec<PowerTriple> = if cfg.dedup {
        let mut canon: Vec<PowerTriple> =
            raw.iter().map(|h| canonical_solution(h, cfg.k)).collect();
        canon.sort_by_key(triple_key);
        canon.dedup();
        canon
    } else {
        raw.iter().flat_map(|h| expand_solution(h, cfg.k)).collect()
    };
    solutions.sort_by_key(triple_key);

    let nonzero = (2 * b as u64 + 1).pow(2) - 1;
    Ok(SearchReport {
        config: cfg.clone(),
        solutions,
        pairs_tested: nonzero * nonzero,
        elapsed: started.elapsed(),
    })
}

/// Forward the contiguous prefix of completed shards to the sink.
fn drain_ready(
    completed: &BTreeMap<usize, Vec<RawHit>>,
    next_emit: &mut usize,
    raw: &mut Vec<RawHit>,
    k: u32,
    sink: &mut impl FnMut(&PowerTriple),
) {
    while let Some(hits) = completed.get(next_emit) {
        for hit in hits {
            sink(&PowerTriple::new(
                hit.x.clone(),
                hit.y.clone(),
                hit.w.clone(),
                k,
            ));
            raw.push(hit.clone());
        }
        *next_emit += 1;
    }
}

/// All orbit variants of a raw hit under the equation's symmetries, each
/// as an ordered solution of the full box scan.
fn expand_solution(hit: &RawHit, k: u32) -> Vec<PowerTriple> {
    let mut out = Vec::new();
    let pairs: Vec<(RingElement, RingElement)> = if hit.x == hit.y {
        vec![(hit.x.clone(), hit.y.clone())]
    } else {
        vec![
            (hit.x.clone(), hit.y.clone()),
            (hit.y.clone(), hit.x.clone()),
        ]
    };
    for (a, b) in pairs {
        if k.is_multiple_of(2) {
            for sa in [1i64, -1] {
                for sb in [1i64, -1] {
                    let x = if sa == 1 { a.clone() } else { -&a };
                    let y = if sb == 1 { b.clone() } else { -&b };
                    out.push(PowerTriple::new(x, y, hit.w.clone(), k));
                }
            }
        } else {
            out.push(PowerTriple::new(a.clone(), b.clone(), hit.w.clone(), k));
            out.push(PowerTriple::new(-&a, -&b, -&hit.w, k));
        }
    }
    out
}

/// The lexicographically smallest orbit variant; used for dedup.
fn canonical_solution(hit: &RawHit, k: u32) -> PowerTriple {
    expand_solution(hit, k)
        .into_iter()
        .filter(|t| lex_key(&t.x) <= lex_key(&t.y))
        .min_by_key(triple_key)
        .expect("orbit is nonempty")
}

enum PowVal {
    Small(i128, i128),
    Big(RingElement),
}

fn mul_small(a: (i128, i128), b: (i128, i128)) -> Option<(i128, i128)> {
    let ac = a.0.checked_mul(b.0)?;
    let bd = a.1.checked_mul(b.1)?;
    let ad = a.0.checked_mul(b.1)?;
    let bc = a.1.checked_mul(b.0)?;
    Some((ac.checked_add(bd)?, ad.checked_add(bc)?.checked_add(bd)?))
}

fn pow_small(m: i64, n: i64, k: u32) -> Option<(i128, i128)> {
    let base = (m as i128, n as i128);
    let mut acc = (1i128, 0i128);
    for _ in 0..k {
        acc = mul_small(acc, base)?;
    }
    Some(acc)
}

fn precompute_powers(scan: &[(i64, i64)], k: u32) -> Vec<PowVal> {
    scan.iter()
        .map(|&(m, n)| match pow_small(m, n, k) {
            Some(p) => PowVal::Small(p.0, p.1),
            None => PowVal::Big(RingElement::new(m, n).pow(k)),
        })
        .collect()
}

const RESIDUE_MODULUS: u64 = 4096;

/// Bit table of k-th power residues mod 4096; a cheap rejection test for
/// "norm(s) is a perfect k-th power".
fn kth_power_residues(k: u32) -> Vec<bool> {
    let mut table = vec![false; RESIDUE_MODULUS as usize];
    for c in 0..RESIDUE_MODULUS {
        let mut acc = 1u64;
        for _ in 0..k {
            acc = (acc * c) % RESIDUE_MODULUS;
        }
        table[acc as usize] = true;
    }
    table
}

/// Is a (≥ 0) a perfect k-th power of an integer?
fn is_perfect_kth_power(a: i128, k: u32) -> bool {
    if a <= 1 {
        return a >= 0;
    }
    let estimate = (a as f64).powf(1.0 / k as f64).round() as i128;
    for c in (estimate - 2).max(0)..=estimate + 2 {
        match c.checked_pow(k) {
            Some(p) if p == a => return true,
            Some(p) if p > a => return false,
            _ => {}
        }
    }
    false
}

/// Exact sign of (u + v√5); None when the squares comparison would overflow.
fn surd_sign_small(u: i128, v: i128) -> Option<i8> {
    match (u.signum(), v.signum()) {
        (0, 0) => Some(0),
        (s, 0) | (0, s) => Some(s as i8),
        (a, b) if a == b => Some(a as i8),
        (a, b) => {
            let u2 = u.checked_mul(u)?;
            let v2 = v.checked_mul(v)?.checked_mul(5)?;
            if u2 > v2 {
                Some(a as i8)
            } else {
                Some(b as i8)
            }
        }
    }
}

/// Scan all pairs (shard, j) with j ≥ shard over the scan list.
fn scan_shard(
    shard: usize,
    scan: &[(i64, i64)],
    powers: &[PowVal],
    k: u32,
    even: bool,
    residues: &[bool],
) -> Vec<RawHit> {
    let mut hits = Vec::new();
    let (xm, xn) = scan[shard];
    for j in shard..scan.len() {
        let (ym, yn) = scan[j];
        if !even {
            // Orbit pruning for odd k: {a, b} ~ {−a, −b}; keep the
            // lexicographically smaller sorted representative.
            if ((-ym, -yn), (-xm, -xn)) < ((xm, xn), (ym, yn)) {
                continue;
            }
        }
        let found = match (&powers[shard], &powers[j]) {
            (PowVal::Small(am, an), PowVal::Big(q)) => {
                probe_big(&(&RingElement::new(*am, *an) + q), k)
            }
            (PowVal::Big(p), PowVal::Small(bm, bn)) => {
                probe_big(&(p + &RingElement::new(*bm, *bn)), k)
            }
            (PowVal::Big(p), PowVal::Big(q)) => probe_big(&(p + q), k),
            (PowVal::Small(am, an), PowVal::Small(bm, bn)) => {
                match probe_small(*am, *an, *bm, *bn, k, even, residues) {
                    Probe::Rejected => None,
                    Probe::Found(w) => Some(w),
                    Probe::Overflow => {
                        let s = &RingElement::new(*am, *an) + &RingElement::new(*bm, *bn);
                        probe_big(&s, k)
                    }
                }
            }
        };
        if let Some(w) = found {
            hits.push(RawHit {
                x: RingElement::new(xm, xn),
                y: RingElement::new(ym, yn),
                w,
            });
        }
    }
    hits
}

enum Probe {
    Rejected,
    Overflow,
    Found(RingElement),
}

/// Fast-path test of s = (am+anτ) + (bm+bnτ) for being a k-th power.
fn probe_small(
    am: i128,
    an: i128,
    bm: i128,
    bn: i128,
    k: u32,
    even: bool,
    residues: &[bool],
) -> Probe {
    let (Some(sm), Some(sn)) = (am.checked_add(bm), an.checked_add(bn)) else {
        return Probe::Overflow;
    };
    if sm == 0 && sn == 0 {
        return Probe::Rejected;
    }
    // norm(s) = norm(w)^k must be a perfect k-th power of an integer
    let norm = (|| {
        let a = sm.checked_mul(sm)?;
        let b = sm.checked_mul(sn)?;
        let c = sn.checked_mul(sn)?;
        a.checked_add(b)?.checked_sub(c)
    })();
    let Some(norm) = norm else {
        return Probe::Overflow;
    };
    if even && norm < 0 {
        return Probe::Rejected;
    }
    let norm_abs = norm.unsigned_abs();
    if !residues[(norm_abs % RESIDUE_MODULUS as u128) as usize] {
        return Probe::Rejected;
    }
    if norm_abs > i128::MAX as u128 || !is_perfect_kth_power(norm_abs as i128, k) {
        return Probe::Rejected;
    }
    if even {
        // both real embeddings of s must be nonnegative for an even root
        let Some(u) = sm.checked_mul(2).and_then(|d| d.checked_add(sn)) else {
            return Probe::Overflow;
        };
        match (surd_sign_small(u, sn), surd_sign_small(u, -sn)) {
            (Some(a), Some(b)) => {
                if a < 0 || b < 0 {
                    return Probe::Rejected;
                }
            }
            _ => return Probe::Overflow,
        }
    }
    match RingElement::new(sm, sn).kth_root(k) {
        Some(w) if !w.is_zero() => Probe::Found(w),
        _ => Probe::Rejected,
    }
}

fn probe_big(s: &RingElement, k: u32) -> Option<RingElement> {
    if s.is_zero() {
        return None;
    }
    s.kth_root(k).filter(|w| !w.is_zero())
}

// --- checkpoint file: a JSON header line, then one JSON line per shard ---

fn write_checkpoint_header(path: &Path, cfg: &SearchConfig, shards: usize) -> Result<(), Error> {
    let header = serde_json::json!({
        "version": 1,
        "k": cfg.k,
        "bound": cfg.bound,
        "shards": shards,
    });
    let mut file = std::fs::File::create(path)?;
    writeln!(file, "{header}")?;
    Ok(())
}

fn append_checkpoint_line(path: &Path, shard: usize, hits: &[RawHit]) -> Result<(), Error> {
    let solutions: Vec<serde_json::Value> = hits
        .iter()
        .map(|h| {
            serde_json::json!([
                h.x.m().to_string(),
                h.x.n().to_string(),
                h.y.m().to_string(),
                h.y.n().to_string(),
                h.w.m().to_string(),
                h.w.n().to_string(),
            ])
        })
        .collect();
    let line = serde_json::json!({ "shard": shard, "solutions": solutions });
    let mut file = std::fs::OpenOptions::new().append(true).open(path)?;
    writeln!(file, "{line}")?;
    Ok(())
}

fn load_checkpoint(
    path: &Path,
    cfg: &SearchConfig,
    shards: usize,
) -> Result<BTreeMap<usize, Vec<RawHit>>, Error> {
    let file = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(file).lines();
    let header_line = lines
        .next()
        .ok_or(Error::Internal("checkpoint file is empty"))??;
    let header: serde_json::Value = serde_json::from_str(&header_line)
        .map_err(|_| Error::Internal("checkpoint header is not valid JSON"))?;
    let matches = header["version"] == 1
        && header["k"] == cfg.k
        && header["bound"] == cfg.bound
        && header["shards"] == shards;
    if !matches {
        return Err(Error::Internal(
            "checkpoint does not match this configuration",
        ));
    }

    let parse_int =
        |v: &serde_json::Value| -> Option<BigInt> { v.as_str().and_then(|s| s.parse().ok()) };
    let mut completed = BTreeMap::new();
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: serde_json::Value =
            serde_json::from_str(&line).map_err(|_| Error::Internal("corrupt checkpoint line"))?;
        let shard = entry["shard"]
            .as_u64()
            .ok_or(Error::Internal("checkpoint line without shard index"))?
            as usize;
        if shard >= shards {
            return Err(Error::Internal("checkpoint shard index out of range"));
        }
        let mut hits = Vec::new();
        for sol in entry["solutions"]
            .as_array()
            .ok_or(Error::Internal("checkpoint line without solutions"))?
        {
            let coords: Vec<BigInt> = sol
                .as_array()
                .map(|a| a.iter().filter_map(parse_int).collect())
                .unwrap_or_default();
            if coords.len() != 6 {
                return Err(Error::Internal("corrupt checkpoint solution"));
            }
            hits.push(RawHit {
                x: RingElement::new(coords[0].clone(), coords[1].clone()),
                y: RingElement::new(coords[2].clone(), coords[3].clone()),
                w: RingElement::new(coords[4].clone(), coords[5].clone()),
            });
        }
        completed.insert(shard, hits);
    }
    Ok(completed)
}
