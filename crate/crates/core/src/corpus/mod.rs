//! Text ingestion: tokenization, vocabulary construction, subsampling,
//! labeled-dataset loading and negation-marker statistics.

pub mod labeled;
pub mod lexicon;
pub mod negstats;
pub mod stream;
pub mod tokenize;
pub mod vocab;

pub use labeled::{load_labeled_dataset, LabeledDataset, LabeledExample, Polarity, Split};
pub use lexicon::NegationLexicon;
pub use negstats::{negation_stats, ClassMarkerStats, MarkerBucket};
pub use stream::{RawCorpus, SentenceStream};
pub use tokenize::tokenize;
pub use vocab::{build_vocabulary, subsample_keep_probability, Vocabulary};
