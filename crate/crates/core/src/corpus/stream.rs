//! Corpus containers. `RawCorpus` holds tokenized sentences grouped into
//! documents; `SentenceStream` is the id-mapped view the trainers consume.
//! Sentence order inside a document is stable, which FastSent's neighbor
//! contexts rely on.

use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};

use super::tokenize::tokenize;
use super::vocab::Vocabulary;

/// Tokenized text, one `Vec<String>` per sentence, grouped into documents.
#[derive(Debug, Clone, Default)]
pub struct RawCorpus {
    documents: Vec<Vec<Vec<String>>>,
}

impl RawCorpus {
    /// Parse corpus text: one sentence per line, blank line = document
    /// boundary. Lines containing only whitespace count as blank.
    pub fn from_text(text: &str) -> Self {
        let mut documents = Vec::new();
        let mut current: Vec<Vec<String>> = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                if !current.is_empty() {
                    documents.push(std::mem::take(&mut current));
                }
            } else {
                current.push(tokenize(line));
            }
        }
        if !current.is_empty() {
            documents.push(current);
        }
        RawCorpus { documents }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let reader = std::io::BufReader::new(file);
        let mut documents = Vec::new();
        let mut current: Vec<Vec<String>> = Vec::new();
        for line in reader.lines() {
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.trim().is_empty() {
                if !current.is_empty() {
                    documents.push(std::mem::take(&mut current));
                }
            } else {
                current.push(tokenize(&line));
            }
        }
        if !current.is_empty() {
            documents.push(current);
        }
        Ok(RawCorpus { documents })
    }

    pub fn documents(&self) -> &[Vec<Vec<String>>] {
        &self.documents
    }

    pub fn sentence_count(&self) -> usize {
        self.documents.iter().map(|d| d.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}

/// Id-mapped corpus. Tokens below the vocabulary's min-count are dropped;
/// sentences keep their position (possibly becoming empty) so that neighbor
/// relations and sentence ids stay stable.
#[derive(Debug, Clone)]
pub struct SentenceStream {
    documents: Vec<Vec<Vec<u32>>>,
    sentence_count: usize,
}

impl SentenceStream {
    pub fn index(corpus: &RawCorpus, vocab: &Vocabulary) -> Self {
        let documents: Vec<Vec<Vec<u32>>> = corpus
            .documents()
            .iter()
            .map(|doc| {
                doc.iter()
                    .map(|sentence| {
                        sentence.iter().filter_map(|t| vocab.id(t)).collect()
                    })
                    .collect()
            })
            .collect();
        let sentence_count = documents.iter().map(|d| d.len()).sum();
        SentenceStream {
            documents,
            sentence_count,
        }
    }

    pub fn documents(&self) -> &[Vec<Vec<u32>>] {
        &self.documents
    }

    /// Total sentences across documents, including ones left empty by
    /// vocabulary filtering. Paragraph-vector sentence ids index into this.
    pub fn sentence_count(&self) -> usize {
        self.sentence_count
    }

    pub fn is_empty(&self) -> bool {
        self.sentence_count == 0
    }

    /// Sentences in document order with their global sentence id.
    pub fn sentences_with_ids(&self) -> impl Iterator<Item = (usize, &[u32])> {
        self.documents
            .iter()
            .flat_map(|d| d.iter())
            .enumerate()
            .map(|(i, s)| (i, s.as_slice()))
    }
}
