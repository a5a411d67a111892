//! Runs a PDA as a coded caching scheme.
//!
//! Each of the `N` files is cut into `F` packets. User `k` caches packet `j`
//! of every file whenever `p[j][k]` is a star. Given demands `d`, the server
//! broadcasts one signal per integer `s`: the XOR of packet `j` of file
//! `d[k]` over every cell `(j, k)` holding `s`. A user recovers each missing
//! packet by XOR-ing the signal with the other packets in it, all of which
//! sit in its cache.

use std::collections::BTreeMap;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::pda::{validate, Entry, PdaArray, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("array is not a PDA:\n{0}")]
    InvalidPda(Box<ValidationReport>),
    #[error("library needs at least one file")]
    NoFiles,
    #[error("file {index} has {found} bytes, expected {expected}")]
    UnequalFiles {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("demand vector has {found} entries for {expected} users")]
    DemandLength { expected: usize, found: usize },
    #[error("user {user} demands file {file} but there are only {files}")]
    DemandOutOfRange {
        user: usize,
        file: usize,
        files: usize,
    },
    #[error("user {user} index out of range")]
    UserOutOfRange { user: usize },
    #[error("user {user} needs packet {packet} of file {file}, which it does not cache")]
    MissingPacket {
        user: usize,
        file: usize,
        packet: usize,
    },
    #[error("signal {0} was not received")]
    MissingSignal(usize),
}

fn require_pda(p: &PdaArray) -> Result<(), SimError> {
    let report = validate(p);
    if report.is_pda() {
        Ok(())
    } else {
        Err(SimError::InvalidPda(Box::new(report)))
    }
}

fn xor_into(acc: &mut [u8], other: &[u8]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a ^= b;
    }
}

/// `N` equal-length files, zero-padded to a multiple of `F` and split into
/// `F` packets each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileLibrary {
    files: Vec<Vec<u8>>,
    file_len: usize,
    packet_len: usize,
    packets: usize,
}

impl FileLibrary {
    pub fn new(files: Vec<Vec<u8>>, packets: usize) -> Result<Self, SimError> {
        let file_len = files.first().ok_or(SimError::NoFiles)?.len();
        if let Some((index, f)) = files.iter().enumerate().find(|(_, f)| f.len() != file_len) {
            return Err(SimError::UnequalFiles {
                index,
                expected: file_len,
                found: f.len(),
            });
        }
        let packets = packets.max(1);
        let packet_len = file_len.div_ceil(packets);
        let files = files
            .into_iter()
            .map(|mut f| {
                f.resize(packet_len * packets, 0);
                f
            })
            .collect();
        Ok(FileLibrary {
            files,
            file_len,
            packet_len,
            packets,
        })
    }

    /// `n` files of `file_len` pseudorandom bytes drawn from `seed`.
    pub fn random(n: usize, file_len: usize, packets: usize, seed: u64) -> Result<Self, SimError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let files = (0..n)
            .map(|_| {
                let mut f = vec![0u8; file_len];
                rng.fill_bytes(&mut f);
                f
            })
            .collect();
        Self::new(files, packets)
    }

    pub fn len(&self) -> usize {
        self.files.len()
    }

    pub fn is_empty(&self) -> bool {
        self.files.is_empty()
    }

    /// Unpadded file length in bytes.
    pub fn file_len(&self) -> usize {
        self.file_len
    }

    pub fn packet_len(&self) -> usize {
        self.packet_len
    }

    pub fn packet(&self, file: usize, j: usize) -> &[u8] {
        &self.files[file][j * self.packet_len..(j + 1) * self.packet_len]
    }

    /// The original bytes of file `i`, without padding.
    pub fn file(&self, i: usize) -> &[u8] {
        &self.files[i][..self.file_len]
    }
}

/// What user `k` stored during placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UserCache {
    pub user: usize,
    packets: BTreeMap<(usize, usize), Vec<u8>>,
}

impl UserCache {
    /// Packet `j` of file `i`, if cached.
    pub fn get(&self, file: usize, j: usize) -> Option<&[u8]> {
        self.packets.get(&(file, j)).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.packets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.packets.is_empty()
    }

    pub fn cached_bytes(&self) -> usize {
        self.packets.values().map(Vec::len).sum()
    }

    pub fn keys(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.packets.keys().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemandVector(Vec<usize>);

impl DemandVector {
    pub fn new(demands: Vec<usize>, files: usize) -> Result<Self, SimError> {
        if let Some((user, &file)) = demands.iter().enumerate().find(|(_, &d)| d >= files) {
            return Err(SimError::DemandOutOfRange { user, file, files });
        }
        Ok(DemandVector(demands))
    }

    /// `d_k = k mod N`.
    pub fn identity(users: usize, files: usize) -> Self {
        DemandVector((0..users).map(|k| k % files.max(1)).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// The `S` broadcast signals, plus the public lengths needed to unpad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignalSet {
    pub signals: Vec<Vec<u8>>,
    pub packet_len: usize,
    pub file_len: usize,
}

impl SignalSet {
    pub fn bytes_sent(&self) -> usize {
        self.signals.iter().map(Vec::len).sum()
    }
}

pub fn place(p: &PdaArray, lib: &FileLibrary) -> Result<Vec<UserCache>, SimError> {
    require_pda(p)?;
    Ok((0..p.cols())
        .map(|k| {
            let mut packets = BTreeMap::new();
            for j in (0..p.rows()).filter(|&j| p.get(j, k).is_star()) {
                for i in 0..lib.len() {
                    packets.insert((i, j), lib.packet(i, j).to_vec());
                }
            }
            UserCache { user: k, packets }
        })
        .collect())
}

fn check_demands(p: &PdaArray, lib_len: usize, d: &DemandVector) -> Result<(), SimError> {
    if d.0.len() != p.cols() {
        return Err(SimError::DemandLength {
            expected: p.cols(),
            found: d.0.len(),
        });
    }
    if let Some((user, &file)) = d.0.iter().enumerate().find(|(_, &f)| f >= lib_len) {
        return Err(SimError::DemandOutOfRange {
            user,
            file,
            files: lib_len,
        });
    }
    Ok(())
}

/// Signal `s` is the XOR of packet `j` of file `d[k]` over all cells
/// `(j, k)` holding `s`. All `S` signals are sent, even for repeated demands.
pub fn deliver(p: &PdaArray, lib: &FileLibrary, d: &DemandVector) -> Result<SignalSet, SimError> {
    require_pda(p)?;
    check_demands(p, lib.len(), d)?;
    let mut signals = vec![vec![0u8; lib.packet_len()]; p.claimed_s()];
    for ((j, k), e) in p.entries() {
        if let Entry::Int(s) = e {
            xor_into(&mut signals[s], lib.packet(d.0[k], j));
        }
    }
    Ok(SignalSet {
        signals,
        packet_len: lib.packet_len(),
        file_len: lib.file_len(),
    })
}

/// Recovers file `d[k]` for user `k` from its cache and the signals alone.
pub fn decode(
    p: &PdaArray,
    k: usize,
    cache: &UserCache,
    signals: &SignalSet,
    d: &DemandVector,
) -> Result<Vec<u8>, SimError> {
    if k >= p.cols() {
        return Err(SimError::UserOutOfRange { user: k });
    }
    if d.0.len() != p.cols() {
        return Err(SimError::DemandLength {
            expected: p.cols(),
            found: d.0.len(),
        });
    }
    let occurrences = p.occurrences();
    let wanted = d.0[k];
    let lookup = |file: usize, packet: usize| {
        cache.get(file, packet).ok_or(SimError::MissingPacket {
            user: k,
            file,
            packet,
        })
    };

    let mut out = Vec::with_capacity(signals.packet_len * p.rows());
    for j in 0..p.rows() {
        match p.get(j, k) {
            Entry::Star => out.extend_from_slice(lookup(wanted, j)?),
            Entry::Int(s) => {
                let mut packet = signals
                    .signals
                    .get(s)
                    .ok_or(SimError::MissingSignal(s))?
                    .clone();
                for &(j2, k2) in occurrences[s].iter().filter(|&&pos| pos != (j, k)) {
                    xor_into(&mut packet, lookup(d.0[k2], j2)?);
                }
                out.extend_from_slice(&packet);
            }
        }
    }
    out.truncate(signals.file_len);
    Ok(out)
}

/// One user's line of a run report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UserOutcome {
    pub user: usize,
    pub ok: bool,
    pub rate_num: usize,
    pub rate_den: usize,
    pub bytes_sent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    pub users: Vec<UserOutcome>,
    /// `(S, F)`, unreduced.
    pub rate: (usize, usize),
    /// `(Z, F)`, unreduced.
    pub cache_ratio: (usize, usize),
    pub bytes_sent: usize,
    pub file_len: usize,
    pub packet_len: usize,
    /// Bytes held by each user's cache.
    pub cached_bytes: Vec<usize>,
}

impl SchemeReport {
    pub fn all_ok(&self) -> bool {
        self.users.iter().all(|u| u.ok)
    }

    /// One JSON object per user, newline-terminated.
    pub fn to_json_lines(&self) -> String {
        self.users
            .iter()
            .map(|u| serde_json::to_string(u).expect("plain struct serializes") + "\n")
            .collect()
    }

    /// `userK OK|FAIL` per user, then a `rate=S/F bytes=B` summary line.
    pub fn to_text(&self) -> String {
        let mut out: String = self
            .users
            .iter()
            .map(|u| format!("user{} {}\n", u.user, if u.ok { "OK" } else { "FAIL" }))
            .collect();
        out.push_str(&format!(
            "rate={}/{} bytes={}\n",
            self.rate.0, self.rate.1, self.bytes_sent
        ));
        out
    }
}

/// Place, deliver and decode with a given library, checking every user
/// against the original file.
pub fn run_with_library(
    p: &PdaArray,
    lib: &FileLibrary,
    d: &DemandVector,
) -> Result<SchemeReport, SimError> {
    let caches = place(p, lib)?;
    let signals = deliver(p, lib, d)?;
    let params = p.params();
    let bytes_sent = signals.bytes_sent();
    let users = caches
        .iter()
        .map(|cache| {
            let k = cache.user;
            let ok = decode(p, k, cache, &signals, d)? == lib.file(d.0[k]);
            Ok(UserOutcome {
                user: k,
                ok,
                rate_num: params.s,
                rate_den: params.f,
                bytes_sent,
            })
        })
        .collect::<Result<_, SimError>>()?;
    Ok(SchemeReport {
        users,
        rate: (params.s, params.f),
        cache_ratio: (params.z, params.f),
        bytes_sent,
        file_len: lib.file_len(),
        packet_len: lib.packet_len(),
        cached_bytes: caches.iter().map(UserCache::cached_bytes).collect(),
    })
}

/// End-to-end run with `n` pseudorandom files of `file_len` bytes.
pub fn run_scheme(
    p: &PdaArray,
    n: usize,
    d: &DemandVector,
    file_len: usize,
    seed: u64,
) -> Result<SchemeReport, SimError> {
    require_pda(p)?;
    check_demands(p, n, d)?;
    let lib = FileLibrary::random(n, file_len, p.rows(), seed)?;
    run_with_library(p, &lib, d)
}
