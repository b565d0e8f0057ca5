#pragma once

// Leaf gadgets for exercising reductions in isolation: a SyntheticEdge owns a
// block of fresh vertices and answers any admitted operation with member
// trees picked through a shared Chooser, so a driver can walk every shape.

#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "powfactor/gadgets.hpp"

namespace lab {

using namespace powfactor;

class Chooser {
public:
    int pick(int count) {
        if (pos_ == digits_.size()) {
            digits_.push_back(random_ ? static_cast<int>(rng_() % static_cast<unsigned>(count)) : 0);
            radix_.push_back(count);
        } else {
            radix_[pos_] = count;
        }
        return digits_[pos_++] % count;
    }

    void rewind() { pos_ = 0; }

    // Next combination in odometer order; false once all were visited.
    bool advance() {
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (++digits_[i] < radix_[i]) {
                digits_.resize(i + 1);
                radix_.resize(i + 1);
                pos_ = 0;
                return true;
            }
        }
        return false;
    }

    void randomize(unsigned seed) {
        random_ = true;
        rng_.seed(seed);
    }

    // Fresh random choices for the next run.
    void reroll() {
        digits_.clear();
        radix_.clear();
        pos_ = 0;
    }

private:
    std::vector<int> digits_;
    std::vector<int> radix_;
    std::size_t pos_ = 0;
    bool random_ = false;
    std::mt19937 rng_;
};

class SyntheticEdge final : public EdgeGadget {
public:
    SyntheticEdge(Label label, Vertex tail, Vertex head, Vertex& next_id, std::shared_ptr<Chooser> chooser)
        : EdgeGadget(label, tail, head, "synthetic"), chooser_(std::move(chooser)) {
        std::vector<Vertex> mine;
        for (int i = 0; i < 12 + weight(label); ++i) mine.push_back(next_id++);
        own(mine);
    }

    // Exact operations received, in stored orientation.
    const std::vector<Operation>& seen() const { return seen_; }

private:
    Realization do_realize(const Operation& exact) const override {
        seen_.push_back(exact);
        const auto& pool = owned();
        Realization r;
        std::size_t next = 0;
        if (!exact.is_split()) {
            r.subdivided = true;
            r.path.assign(pool.begin(), pool.begin() + exact.times);
            next = static_cast<std::size_t>(exact.times);
        } else {
            auto build = [&](TreeSet s, AttachedTree& tree) {
                const auto& members = members_of(s);
                const TreeShape& shape = members.at(chooser_->pick(static_cast<int>(members.size())));
                for (std::size_t i = 1; i < shape.parent.size(); ++i) {
                    Vertex v = shape.dummy[i] ? -1 : pool.at(next++);
                    tree.push_back({v, shape.parent[i] - 1, static_cast<bool>(shape.dummy[i])});
                }
            };
            build(exact.sets.p, r.tail);
            build(exact.sets.q, r.head);
            std::size_t spare = next;
            for (auto* tree : {&r.tail, &r.head})
                for (auto& node : *tree)
                    if (node.dummy) node.vertex = pool.at(spare++);
        }
        if ((pool.size() - next) % 4 != 0) throw std::logic_error("synthetic edge: leftover not divisible by 4");
        for (std::size_t i = next; i < pool.size(); i += 4) r.parts.push_back({{pool[i], pool[i + 1], pool[i + 2], pool[i + 3]}, {}});
        return r;
    }

    static const std::vector<TreeShape>& members_of(TreeSet s) {
        static const auto table = [] {
            std::vector<std::vector<TreeShape>> t;
            for (TreeSet x : kAllTreeSets) t.push_back(all_members(x));
            return t;
        }();
        return table[static_cast<std::size_t>(s)];
    }

    std::shared_ptr<Chooser> chooser_;
    mutable std::vector<Operation> seen_;
};

}  // namespace lab
