#pragma once

#include <string>
#include <vector>

namespace gabm {

/// Append-only observation log. Steps are logical (insertion order), so
/// transcripts stay byte-identical across runs.
class Memory {
public:
    struct Entry {
        int step;
        std::string text;
    };

    void observe(std::string text) {
        // Keep each observation on one line; the prompt format and the
        // scripted backend both rely on that.
        for (auto& c : text)
            if (c == '\n') c = ' ';
        entries_.push_back({static_cast<int>(entries_.size()), std::move(text)});
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<Entry> entries_;
};

} // namespace gabm
