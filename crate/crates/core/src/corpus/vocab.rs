//! Vocabulary construction and the frequency-subsampling rule.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

use super::stream::RawCorpus;

/// Frequency-filtered word-to-id map. Ids are dense, 0-based, assigned in
/// descending corpus-count order with lexicographic tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    entries: Vec<(String, u64)>,
    index: HashMap<String, u32>,
    total_count: u64,
    min_count: u64,
}

impl Vocabulary {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn id(&self, word: &str) -> Option<u32> {
        self.index.get(word).copied()
    }

    pub fn word(&self, id: u32) -> &str {
        &self.entries[id as usize].0
    }

    pub fn count(&self, id: u32) -> u64 {
        self.entries[id as usize].1
    }

    /// Corpus frequency of a word id as a fraction of all retained tokens.
    pub fn frequency(&self, id: u32) -> f64 {
        self.count(id) as f64 / self.total_count as f64
    }

    pub fn min_count(&self) -> u64 {
        self.min_count
    }

    pub fn entries(&self) -> &[(String, u64)] {
        &self.entries
    }

    /// Counts raised to `power`, in id order; the noise distribution for
    /// negative sampling.
    pub fn noise_weights(&self, power: f64) -> Vec<f64> {
        self.entries
            .iter()
            .map(|(_, c)| (*c as f64).powf(power))
            .collect()
    }

    /// SHA-256 over the canonical `word\tcount\n` listing, as a hex string.
    /// Stored in model headers so a model can be checked against the
    /// vocabulary it was trained with.
    pub fn hash(&self) -> String {
        let mut hasher = Sha256::new();
        for (w, c) in &self.entries {
            hasher.update(w.as_bytes());
            hasher.update(b"\t");
            hasher.update(c.to_string().as_bytes());
            hasher.update(b"\n");
        }
        hasher
            .finalize()
            .iter()
            .fold(String::with_capacity(64), |mut s, b| {
                use std::fmt::Write as _;
                let _ = write!(s, "{b:02x}");
                s
            })
    }

    pub fn from_entries(entries: Vec<(String, u64)>, min_count: u64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Invalid("vocabulary is empty".into()));
        }
        let mut index = HashMap::with_capacity(entries.len());
        let mut total = 0u64;
        for (i, (w, c)) in entries.iter().enumerate() {
            if index.insert(w.clone(), i as u32).is_some() {
                return Err(Error::Invalid(format!("duplicate vocabulary word `{w}`")));
            }
            total += c;
        }
        Ok(Vocabulary {
            entries,
            index,
            total_count: total,
            min_count,
        })
    }

    /// Text form: `word<TAB>count` per line, id order.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        for (w, c) in &self.entries {
            out.push_str(w);
            out.push('\t');
            out.push_str(&c.to_string());
            out.push('\n');
        }
        std::fs::write(path, out).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let reader = std::io::BufReader::new(file);
        let mut entries = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.is_empty() {
                continue;
            }
            let (w, c) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(path, lineno + 1, "expected word<TAB>count"))?;
            let c: u64 = c
                .parse()
                .map_err(|_| Error::parse(path, lineno + 1, format!("bad count `{c}`")))?;
            entries.push((w.to_string(), c));
        }
        let min_count = entries.iter().map(|(_, c)| *c).min().unwrap_or(1);
        Vocabulary::from_entries(entries, min_count)
    }

    pub fn write_binary<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        w.write_all(&(self.entries.len() as u64).to_le_bytes())?;
        w.write_all(&self.min_count.to_le_bytes())?;
        for (word, count) in &self.entries {
            w.write_all(&(word.len() as u32).to_le_bytes())?;
            w.write_all(word.as_bytes())?;
            w.write_all(&count.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: std::io::Read>(r: &mut R) -> Result<Self> {
        let bad = |m: &str| Error::Model(format!("vocab payload: {m}"));
        let mut buf8 = [0u8; 8];
        r.read_exact(&mut buf8).map_err(|_| bad("truncated length"))?;
        let n = u64::from_le_bytes(buf8) as usize;
        r.read_exact(&mut buf8).map_err(|_| bad("truncated min_count"))?;
        let min_count = u64::from_le_bytes(buf8);
        let mut entries = Vec::with_capacity(n);
        let mut buf4 = [0u8; 4];
        for _ in 0..n {
            r.read_exact(&mut buf4).map_err(|_| bad("truncated word length"))?;
            let len = u32::from_le_bytes(buf4) as usize;
            let mut word = vec![0u8; len];
            r.read_exact(&mut word).map_err(|_| bad("truncated word"))?;
            let word = String::from_utf8(word).map_err(|_| bad("word is not utf-8"))?;
            r.read_exact(&mut buf8).map_err(|_| bad("truncated count"))?;
            entries.push((word, u64::from_le_bytes(buf8)));
        }
        Vocabulary::from_entries(entries, min_count)
    }
}

/// Count words over the corpus and keep those with frequency >= `min_count`.
pub fn build_vocabulary(corpus: &RawCorpus, min_count: u64) -> Result<Vocabulary> {
    if min_count < 1 {
        return Err(Error::Invalid(format!(
            "min_count must be >= 1, got {min_count}"
        )));
    }
    let mut counts: HashMap<&str, u64> = HashMap::new();
    for doc in corpus.documents() {
        for sentence in doc {
            for token in sentence {
                *counts.entry(token.as_str()).or_insert(0) += 1;
            }
        }
    }
    let mut entries: Vec<(String, u64)> = counts
        .into_iter()
        .filter(|(_, c)| *c >= min_count)
        .map(|(w, c)| (w.to_string(), c))
        .collect();
    if entries.is_empty() {
        return Err(Error::Invalid(format!(
            "no word reaches min_count {min_count}; vocabulary would be empty"
        )));
    }
    entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Vocabulary::from_entries(entries, min_count)
}

/// Keep probability min(1, sqrt(threshold / frequency)) for one token
/// occurrence. `None` disables subsampling (FastSent mode) and always keeps.
pub fn subsample_keep_probability(word_frequency: f64, threshold: Option<f64>) -> f64 {
    let Some(t) = threshold else { return 1.0 };
    debug_assert!(word_frequency > 0.0 && word_frequency <= 1.0);
    debug_assert!(t > 0.0);
    (t / word_frequency).sqrt().min(1.0)
}
