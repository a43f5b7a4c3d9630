#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/radicals.hpp"

namespace ringlab {

struct EngineOptions {
    RingLimits limits{};
    ClassifyOptions classify{};
};

/// Owns the per-ring memo stores (analysis and classification records,
/// keyed by ring hash) and the group-ring construction metadata needed by
/// `augmentation`. Rings themselves stay immutable; all caching lives here.
/// Cache fills are idempotent and guarded for concurrent use.
class Engine {
public:
    explicit Engine(EngineOptions opts = {}) : opts_(std::move(opts)) {}

    const EngineOptions& options() const { return opts_; }
    const RingLimits& limits() const { return opts_.limits; }

    const RingAnalysis& analyze(const FiniteRing& r);
    const ClassificationRecord& classify(const FiniteRing& r);

    /// Convenience verdict accessors used all over the claim checkers.
    bool is_w_sqrt_ju(const FiniteRing& r) { return is_yes(classify(r).w_sqrt_ju); }
    bool is_sqrt_ju(const FiniteRing& r) { return is_yes(classify(r).sqrt_ju); }

    void register_group_ring(const GroupRing& rg);

    /// Augmentation data for a ring previously built by group_ring through
    /// this engine; throws NotAGroupRing otherwise.
    AugmentationResult augmentation_of(const FiniteRing& r);
    const GroupRing* group_ring_info(const FiniteRing& r) const;

    /// Optional hook consulted before computing a classification record and
    /// told about fresh ones (the CLI wires the disk cache in here).
    struct RecordStore {
        virtual ~RecordStore() = default;
        virtual bool load(std::uint64_t hash, std::size_t threshold,
                          ClassificationRecord& out) = 0;
        virtual void store(const ClassificationRecord& rec) = 0;
    };
    void set_record_store(std::shared_ptr<RecordStore> store) { store_ = std::move(store); }

private:
    EngineOptions opts_;
    std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    std::unordered_map<std::uint64_t, std::unique_ptr<RingAnalysis>> analyses_;
    std::unordered_map<std::uint64_t, std::unique_ptr<ClassificationRecord>> records_;
    std::unordered_map<std::uint64_t, GroupRing> group_rings_;
    std::shared_ptr<RecordStore> store_;
};

}  // namespace ringlab
