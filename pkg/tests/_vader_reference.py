"""Independent reference scorer used as the sentiment oracle.

This is a deliberately literal transcription of the published VADER
compound-score algorithm (valence lookup, booster scalars with distance
decay, negation windows, caps emphasis, but-clause reweighting, punctuation
amplification, alpha-15 normalization), kept separate from the package
implementation so the two can be compared on a frozen corpus. It reads the
same bundled lexicon the package ships.
"""

import math
import string

from fundcast.textfeat.sentiment import sentiment_lexicon

B_INCR = 0.293
B_DECR = -0.293
C_INCR = 0.733
N_SCALAR = -0.74

NEGATE = [
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
    "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
    "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
    "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
    "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
    "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
    "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't", "without",
    "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite",
]

BOOSTER_DICT = {}
for _w in ("absolutely amazingly awfully completely considerable considerably "
           "decidedly deeply enormous enormously entirely especially exceptional "
           "exceptionally extreme extremely fabulously fully greatly highly hugely "
           "incredible incredibly intensely major majorly more most particularly "
           "purely quite really remarkably so substantially thoroughly total "
           "totally tremendous tremendously uber unbelievably unusually utter "
           "utterly very").split():
    BOOSTER_DICT[_w] = B_INCR
for _w in ("almost barely hardly kinda kindof kind-of less little marginal "
           "marginally occasional occasionally partly scarce scarcely slight "
           "slightly somewhat sorta sortof sort-of").split():
    BOOSTER_DICT[_w] = B_DECR
BOOSTER_DICT["just enough"] = B_DECR
BOOSTER_DICT["kind of"] = B_DECR
BOOSTER_DICT["sort of"] = B_DECR

SPECIAL_CASES = {
    "the shit": 3.0, "the bomb": 3.0, "bad ass": 1.5, "badass": 1.5,
    "bus stop": 0.0, "yeah right": -2.0, "kiss of death": -1.5,
    "to die for": 3.0, "beating heart": 3.1, "broken heart": -2.9,
}


def negated(input_words, include_nt=True):
    input_words = [str(w).lower() for w in input_words]
    for word in NEGATE:
        if word in input_words:
            return True
    if include_nt:
        for word in input_words:
            if "n't" in word:
                return True
    return False


def normalize(score, alpha=15):
    norm_score = score / math.sqrt((score * score) + alpha)
    if norm_score < -1.0:
        return -1.0
    if norm_score > 1.0:
        return 1.0
    return norm_score


def allcap_differential(words):
    allcap_words = 0
    for word in words:
        if word.isupper():
            allcap_words += 1
    cap_differential = len(words) - allcap_words
    return 0 < cap_differential < len(words)


def scalar_inc_dec(word, valence, is_cap_diff):
    scalar = 0.0
    word_lower = word.lower()
    if word_lower in BOOSTER_DICT:
        scalar = BOOSTER_DICT[word_lower]
        if valence < 0:
            scalar *= -1
        if word.isupper() and is_cap_diff:
            if valence > 0:
                scalar += C_INCR
            else:
                scalar -= C_INCR
    return scalar


class SentiText:
    def __init__(self, text):
        self.text = text
        self.words_and_emoticons = self._words_and_emoticons()
        self.is_cap_diff = allcap_differential(self.words_and_emoticons)

    @staticmethod
    def _strip_punc_if_word(token):
        stripped = token.strip(string.punctuation)
        if len(stripped) <= 2:
            return token
        return stripped

    def _words_and_emoticons(self):
        wes = self.text.split()
        return list(map(self._strip_punc_if_word, wes))


class ReferenceIntensityAnalyzer:
    def __init__(self, lexicon=None):
        self.lexicon = dict(sentiment_lexicon() if lexicon is None else lexicon)

    def compound(self, text):
        if not text:
            return 0.0
        sentitext = SentiText(text)
        sentiments = []
        words_and_emoticons = sentitext.words_and_emoticons
        for i, item in enumerate(words_and_emoticons):
            valence = 0
            if item.lower() in BOOSTER_DICT:
                sentiments.append(valence)
                continue
            if (i < len(words_and_emoticons) - 1 and item.lower() == "kind"
                    and words_and_emoticons[i + 1].lower() == "of"):
                sentiments.append(valence)
                continue
            sentiments = self.sentiment_valence(valence, sentitext, item, i, sentiments)
        sentiments = self._but_check(words_and_emoticons, sentiments)
        return self.score_valence(sentiments, text)

    def sentiment_valence(self, valence, sentitext, item, i, sentiments):
        is_cap_diff = sentitext.is_cap_diff
        words_and_emoticons = sentitext.words_and_emoticons
        item_lowercase = item.lower()
        if item_lowercase in self.lexicon:
            valence = self.lexicon[item_lowercase]
            if (item_lowercase == "no" and i != len(words_and_emoticons) - 1
                    and words_and_emoticons[i + 1].lower() in self.lexicon):
                valence = 0.0
            if ((i > 0 and words_and_emoticons[i - 1].lower() == "no")
                    or (i > 1 and words_and_emoticons[i - 2].lower() == "no")
                    or (i > 2 and words_and_emoticons[i - 3].lower() == "no"
                        and words_and_emoticons[i - 1].lower() in ["or", "nor"])):
                valence = self.lexicon[item_lowercase] * N_SCALAR
            if item.isupper() and is_cap_diff:
                if valence > 0:
                    valence += C_INCR
                else:
                    valence -= C_INCR
            for start_i in range(0, 3):
                if (i > start_i and
                        words_and_emoticons[i - (start_i + 1)].lower() not in self.lexicon):
                    s = scalar_inc_dec(words_and_emoticons[i - (start_i + 1)], valence, is_cap_diff)
                    if start_i == 1 and s != 0:
                        s = s * 0.95
                    if start_i == 2 and s != 0:
                        s = s * 0.9
                    valence = valence + s
                    valence = self._negation_check(valence, words_and_emoticons, start_i, i)
                    if start_i == 2:
                        valence = self._special_idioms_check(valence, words_and_emoticons, i)
            valence = self._least_check(valence, words_and_emoticons, i)
        sentiments.append(valence)
        return sentiments

    def _least_check(self, valence, words_and_emoticons, i):
        if (i > 1 and words_and_emoticons[i - 1].lower() not in self.lexicon
                and words_and_emoticons[i - 1].lower() == "least"):
            if (words_and_emoticons[i - 2].lower() != "at"
                    and words_and_emoticons[i - 2].lower() != "very"):
                valence = valence * N_SCALAR
        elif (i > 0 and words_and_emoticons[i - 1].lower() not in self.lexicon
              and words_and_emoticons[i - 1].lower() == "least"):
            valence = valence * N_SCALAR
        return valence

    @staticmethod
    def _but_check(words_and_emoticons, sentiments):
        words_and_emoticons_lower = [str(w).lower() for w in words_and_emoticons]
        if "but" in words_and_emoticons_lower:
            bi = words_and_emoticons_lower.index("but")
            for si, sentiment in enumerate(sentiments):
                if si < bi:
                    sentiments[si] = sentiment * 0.5
                elif si > bi:
                    sentiments[si] = sentiment * 1.5
        return sentiments

    def _special_idioms_check(self, valence, words_and_emoticons, i):
        words_lower = [str(w).lower() for w in words_and_emoticons]
        onezero = f"{words_lower[i - 1]} {words_lower[i]}"
        twoonezero = f"{words_lower[i - 2]} {words_lower[i - 1]} {words_lower[i]}"
        twoone = f"{words_lower[i - 2]} {words_lower[i - 1]}"
        threetwoone = f"{words_lower[i - 3]} {words_lower[i - 2]} {words_lower[i - 1]}"
        threetwo = f"{words_lower[i - 3]} {words_lower[i - 2]}"
        for seq in (onezero, twoonezero, twoone, threetwoone, threetwo):
            if seq in SPECIAL_CASES:
                valence = SPECIAL_CASES[seq]
                break
        for n_gram in (threetwoone, threetwo, twoone):
            if n_gram in BOOSTER_DICT:
                valence = valence + BOOSTER_DICT[n_gram]
        return valence

    def _negation_check(self, valence, words_and_emoticons, start_i, i):
        words_lower = [str(w).lower() for w in words_and_emoticons]
        if start_i == 0:
            if negated([words_lower[i - (start_i + 1)]]):
                valence = valence * N_SCALAR
        if start_i == 1:
            if words_lower[i - 2] == "never" and words_lower[i - 1] in ("so", "this"):
                valence = valence * 1.25
            elif words_lower[i - 2] == "without" and words_lower[i - 1] == "doubt":
                pass
            elif negated([words_lower[i - (start_i + 1)]]):
                valence = valence * N_SCALAR
        if start_i == 2:
            if (words_lower[i - 3] == "never"
                    and (words_lower[i - 2] in ("so", "this")
                         or words_lower[i - 1] in ("so", "this"))):
                valence = valence * 1.25
            elif (words_lower[i - 3] == "without"
                  and (words_lower[i - 2] == "doubt" or words_lower[i - 1] == "doubt")):
                pass
            elif negated([words_lower[i - (start_i + 1)]]):
                valence = valence * N_SCALAR
        return valence

    @staticmethod
    def _punctuation_emphasis(text):
        ep_count = text.count("!")
        if ep_count > 4:
            ep_count = 4
        amplifier = ep_count * 0.292
        qm_count = text.count("?")
        if qm_count > 1:
            if qm_count <= 3:
                amplifier += qm_count * 0.18
            else:
                amplifier += 0.96
        return amplifier

    def score_valence(self, sentiments, text):
        if sentiments:
            sum_s = float(sum(sentiments))
            punct_emph_amplifier = self._punctuation_emphasis(text)
            if sum_s > 0:
                sum_s += punct_emph_amplifier
            elif sum_s < 0:
                sum_s -= punct_emph_amplifier
            compound = normalize(sum_s)
        else:
            compound = 0.0
        return round(compound, 4)
