#![no_main]

use fplwb_cli::cache::{CacheEntry, CACHE_VERSION};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(entry) = CacheEntry::decode(data, CACHE_VERSION) {
        let again = CacheEntry::decode(entry.encode().as_bytes(), CACHE_VERSION).unwrap();
        assert_eq!(again, entry);
    }
});
