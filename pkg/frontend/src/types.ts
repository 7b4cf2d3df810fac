/**
 * Wire types mirroring the chainstage/1 document format and the studio API.
 * The frontend never re-implements validation; these are shapes only.
 */

export interface Scenario {
  scenario_id: string;
  victim_name: string;
  bully_name: string;
  post_text: string;
  bully_comment: string;
  post_image_note?: string;
}

export interface BehaviorNodeDoc {
  kind: "behavior";
  node_id: string;
  label: string;
  examples: string[];
  reaction_child: string | null;
}

export interface ReactionNodeDoc {
  kind: "reaction";
  node_id: string;
  instruction_label: string;
  examples: string[];
  behavior_children: string[];
}

export type NodeDoc = BehaviorNodeDoc | ReactionNodeDoc;

export interface DesignDocument {
  schema: "chainstage/1";
  design_id: string;
  title: string;
  scenario: Scenario;
  root_behaviors: string[];
  nodes: Record<string, NodeDoc>;
  created_at: string;
  updated_at: string;
}

export interface Violation {
  code: string;
  path: string;
  detail: string;
}

export type Persona = "aggressive" | "upstander" | "passive";

export const PERSONAS: Persona[] = ["aggressive", "upstander", "passive"];

export interface StepOutcome {
  reply: string;
  route: string | null;
  mode: "routed" | "fallback" | "continuation";
}

export interface SessionInfo {
  session_id: string;
  design_id: string;
  design_version: number;
  position: { kind: string; node_id: string | null };
  fallback_count: number;
  student_turns: number;
}

export interface SessionEnvelope {
  session: SessionInfo;
  outcome: StepOutcome | null;
}

export interface Turn {
  speaker: "student" | "chatbot";
  text: string;
  origin: string | null;
  ts: string;
}
