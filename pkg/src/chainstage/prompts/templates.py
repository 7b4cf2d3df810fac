"""Prompt templates, embedded as versioned resources.

These strings are frozen byte-for-byte: golden tests compare rendered prompts
against checked-in files, so ANY byte change here must bump TEMPLATE_VERSION
and regenerate the goldens. Completion cues deliberately end with a trailing
space and no newline — the model completes right after them.
"""

from __future__ import annotations

TEMPLATE_VERSION = "1"

# --- Behavior classifier ---------------------------------------------------

CLASSIFIER_HEADER = (
    "Victim's name is {victim_name}. Bully's name is {bully_name}. "
    "Classify the user inputs into one of the following categories:\n"
    "{prompt_classes}"
)

CLASSIFIER_NONE_RULE = (
    "Only give the name of the category. "
    "If none of these categories match, output 'none' as category'."
)

CLASSIFIER_EXAMPLE_BLOCK = "Input {example_num}: {example}\nCategory {example_num}: {class_name}"

CLASSIFIER_QUERY_BLOCK = (
    "Input {example_num}: {student_message_to_classify}\nCategory {example_num}: "
)

NONE_CATEGORY = "none"

# --- Reaction generator ----------------------------------------------------

REACTION_HEADER = (
    "The student sees a cyberbully on social media. "
    "The bully's name is {bully_name} and the victim's name is {victim_name}. "
    "The student makes a comment in response to the post. "
    "You are talking to that student whose name is not {victim_name} or {bully_name} "
    "so don't call him/her {victim_name} or {bully_name}. "
    "Teach that student to counteract cyberbullies based on the following examples:"
)

REACTION_EXAMPLE_BLOCK = (
    "Example: {example_num}\nContext: {context_example}\nResponse: {response}"
)

REACTION_CLOSING = (
    "Now fill in a new response based on the examples. "
    "Give answers very similar to the examples:"
)

REACTION_QUERY_BLOCK = "Context: {student_message_to_answer}\nResponse: "

# --- Student personas ------------------------------------------------------

PERSONA_PREAMBLE = {
    "aggressive": (
        "You are {student_name}, an aggressive student, and you see the following "
        "on Instagram: {general_context}"
    ),
    "upstander": (
        "You are {student_name}, a supportive student, and you see the following "
        "on Instagram: {general_context}"
    ),
    "passive": (
        "You are {student_name}, a student who ignores the bullying and just comments "
        "on the original post, and you see the following on Instagram: {general_context}"
    ),
}

PERSONA_COMMENT_INSTRUCTION = {
    "aggressive": (
        "Give a comment that the student {student_name} would post under the Instagram "
        "post in which {student_name} insults the bully. Be aggressive. "
        "Answer in the language style of a teenager. "
        "Give an answer that is no longer than 10 words."
    ),
    "upstander": (
        "Give a comment that the student {student_name} would post under the Instagram "
        "post in which {student_name} comforts and supports {victim_name} (the victim). "
        "Be gentle and sweet. Answer in the language style of a teenager. "
        "Give an answer that is no longer than 10 words."
    ),
    "passive": (
        "Give a comment that the student {student_name} would post under the Instagram "
        "post in which {student_name} is looking forward to seeing the ballet recital. "
        "Be gentle and sweet. Answer in the language style of a teenager. "
        "Give an answer that is no longer than 10 words."
    ),
}

PERSONA_REPLY_INSTRUCTION = (
    "You commented under this Instagram post the following comment {comment}. "
    "Based on your comment, a chatbot is trying to teach you how to best act with "
    "a cyberbullying situation. This is your conversation so far: {messages}.\n"
    "\n"
    "Give the next answer of the student to this conversation where you tend to "
    "{agreement} with the chatbot. Answer in the language style of a teenager. "
    "Give an answer that is no longer than 10 words.\n"
    "{student_name}: "
)

PERSONA_AGREEMENT = {
    "aggressive": "not agree",
    "upstander": "agree",
    "passive": "agree",
}

# --- Scenario rendering ----------------------------------------------------

GENERAL_CONTEXT_TEMPLATE = "Post by {victim_name}: {post_text}\nComment by {bully_name}: {bully_comment}"
GENERAL_CONTEXT_IMAGE_LINE = "\nImage: {post_image_note}"

SECTION_SEPARATOR = "\n\n"
