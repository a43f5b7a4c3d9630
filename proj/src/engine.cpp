#include "ringlab/engine.hpp"

namespace ringlab {

const RingAnalysis& Engine::analyze(const FiniteRing& r) {
    {
        std::lock_guard lk(*mu_);
        auto it = analyses_.find(r.hash());
        if (it != analyses_.end()) return *it->second;
    }
    auto fresh = std::make_unique<RingAnalysis>(analyze_ring(r));
    std::lock_guard lk(*mu_);
    auto [it, inserted] = analyses_.emplace(r.hash(), std::move(fresh));
    return *it->second;
}

const ClassificationRecord& Engine::classify(const FiniteRing& r) {
    {
        std::lock_guard lk(*mu_);
        auto it = records_.find(r.hash());
        if (it != records_.end()) return *it->second;
    }
    if (store_) {
        ClassificationRecord loaded;
        if (store_->load(r.hash(), opts_.classify.expensive_order_threshold, loaded)) {
            std::lock_guard lk(*mu_);
            auto [it, inserted] =
                records_.emplace(r.hash(), std::make_unique<ClassificationRecord>(loaded));
            return *it->second;
        }
    }
    const RingAnalysis& a = analyze(r);
    const RingAnalysis& q = analyze(a.quotient_by_j);
    auto rec = std::make_unique<ClassificationRecord>(classify_ring(a, q, opts_.classify));
    if (store_) store_->store(*rec);
    std::lock_guard lk(*mu_);
    auto [it, inserted] = records_.emplace(r.hash(), std::move(rec));
    return *it->second;
}

void Engine::register_group_ring(const GroupRing& rg) {
    std::lock_guard lk(*mu_);
    group_rings_.emplace(rg.ring.hash(), rg);
}

const GroupRing* Engine::group_ring_info(const FiniteRing& r) const {
    auto it = group_rings_.find(r.hash());
    return it == group_rings_.end() ? nullptr : &it->second;
}

AugmentationResult Engine::augmentation_of(const FiniteRing& r) {
    const GroupRing* info = nullptr;
    {
        std::lock_guard lk(*mu_);
        auto it = group_rings_.find(r.hash());
        if (it != group_rings_.end()) info = &it->second;
    }
    if (!info) throw NotAGroupRing("ring " + r.label() + " was not built by group_ring");
    return augmentation(*info);
}

}  // namespace ringlab
